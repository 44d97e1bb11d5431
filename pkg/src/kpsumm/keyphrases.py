"""Per-document keyphrase extraction.

Candidates are contiguous phrases of one to three lemmas that stay inside
a single sentence, cross no punctuation gap, do not start or end with a
stopword, and contain at least one non-numeric lemma.  Each candidate is
scored by a configurable linear combination of eight features, and the
scores are normalized per document so the best phrase gets exactly 1.0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .corpus import Cluster, Document, Normalizer

__all__ = [
    "DEFAULT_WEIGHTS",
    "ExtractorConfig",
    "CandidatePhrase",
    "FeatureVector",
    "ScoredKeyphrase",
    "DocumentProfile",
    "generate_candidates",
    "compute_features",
    "score_keyphrases",
    "build_profiles",
    "load_stopwords",
    "read_extractor_config",
]

# Uniform weights with the verb-content and question features disabled,
# matching the default verb tagger that always reports zero verbs.
DEFAULT_WEIGHTS = (1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0)


@dataclass(frozen=True)
class ExtractorConfig:
    """Knobs for candidate generation and scoring.

    ``feature_weights`` are the eight non-negative coefficients w1..w8 of
    the linear score; at least one must be positive.
    """

    feature_weights: tuple[float, ...] = DEFAULT_WEIGHTS
    stopwords: frozenset[str] = frozenset()
    top_k: int = 15
    max_ngram: int = 3

    def __post_init__(self) -> None:
        if len(self.feature_weights) != 8:
            raise ValueError("feature_weights must have exactly 8 entries")
        if any(w < 0 for w in self.feature_weights):
            raise ValueError("feature weights must be non-negative")
        if not any(w > 0 for w in self.feature_weights):
            raise ValueError("at least one feature weight must be positive")
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")
        if not 1 <= self.max_ngram <= 3:
            raise ValueError("max_ngram must be between 1 and 3")


@dataclass(frozen=True)
class CandidatePhrase:
    lemmas: tuple[str, ...]
    first_occurrence: tuple[int, int]  # (sentence index, token offset)
    surface_frequency: int


@dataclass(frozen=True)
class FeatureVector:
    f1_num_words: int
    f2_phrase_freq: int
    f3_max_word_freq: int
    f4_sentence_location: float
    f5_phrase_location: float
    f6_relative_length: float
    f7_verb_content: int
    f8_is_question: int


@dataclass(frozen=True)
class ScoredKeyphrase:
    lemmas: tuple[str, ...]
    local_score: float
    source_doc: str
    first_sentence: int


@dataclass(frozen=True)
class DocumentProfile:
    """A document reduced to its ranked keyphrases."""

    doc_id: str
    keyphrases: tuple[ScoredKeyphrase, ...]
    length_sentences: int

    @property
    def np(self) -> int:
        return len(self.keyphrases)

    def phrase_keys(self) -> frozenset[tuple[str, ...]]:
        return frozenset(k.lemmas for k in self.keyphrases)


def generate_candidates(
    document: Document, config: ExtractorConfig
) -> list[CandidatePhrase]:
    """Enumerate candidate phrases, deduplicated by lemma sequence.

    Occurrence counts aggregate every accepted window; the recorded first
    occurrence is the earliest (sentence, offset) position.
    """
    stop = config.stopwords
    seen: dict[tuple[str, ...], list] = {}
    for sentence in document.sentences:
        lemmas = sentence.lemmas
        for start in range(len(lemmas)):
            for n in range(1, config.max_ngram + 1):
                end = start + n
                if end > len(lemmas):
                    break
                if n > 1 and (end - 2) in sentence.boundaries:
                    break  # the gap just crossed is a phrase boundary
                phrase = lemmas[start:end]
                if phrase[0] in stop or phrase[-1] in stop:
                    continue
                if all(lemma.isdigit() for lemma in phrase):
                    continue
                entry = seen.get(phrase)
                if entry is None:
                    seen[phrase] = [(sentence.index, start), 1]
                else:
                    entry[1] += 1
    return [
        CandidatePhrase(lemmas=phrase, first_occurrence=first, surface_frequency=count)
        for phrase, (first, count) in seen.items()
    ]


@lru_cache(maxsize=32)
def _lemma_counts(document: Document) -> Counter:
    return Counter(lemma for s in document.sentences for lemma in s.lemmas)


def compute_features(candidate: CandidatePhrase, document: Document) -> FeatureVector:
    """Raw feature values for one candidate.

    Location features are oriented so that earlier positions score higher;
    count features stay unnormalized here and are scaled against their
    per-document maxima during scoring.
    """
    sent_index, offset = candidate.first_occurrence
    sentence = document.sentences[sent_index]
    counts = _lemma_counts(document)
    n_tokens = len(sentence.tokens)
    length = len(document.sentences)
    return FeatureVector(
        f1_num_words=len(candidate.lemmas),
        f2_phrase_freq=candidate.surface_frequency,
        f3_max_word_freq=max(counts[lemma] for lemma in candidate.lemmas),
        f4_sentence_location=1.0 - sent_index / length,
        f5_phrase_location=1.0 - offset / n_tokens,
        f6_relative_length=min(1.0, len(candidate.lemmas) / n_tokens),
        f7_verb_content=sentence.verb_count,
        f8_is_question=1 if sentence.is_question else 0,
    )


def _scaled(value: float, maximum: float) -> float:
    return value / maximum if maximum else 0.0


def score_keyphrases(document: Document, config: ExtractorConfig) -> DocumentProfile:
    """Rank candidates and keep the ``top_k`` as the document profile.

    The raw score is the weighted sum of the eight features, with the
    count-valued ones (f1, f2, f3, f7) divided by their per-document
    maxima so every term lies in [0, 1].  Kept phrases carry the raw
    score divided by the document maximum, so the best phrase scores
    exactly 1.0.  Raw-score ties rank longer phrases first, then earlier
    first occurrences, then lexicographically smaller lemma sequences.
    """
    candidates = generate_candidates(document, config)
    if not candidates:
        raise ValueError(f"no candidates in document {document.doc_id!r}")
    features = [compute_features(c, document) for c in candidates]
    max_f1 = max(f.f1_num_words for f in features)
    max_f2 = max(f.f2_phrase_freq for f in features)
    max_f3 = max(f.f3_max_word_freq for f in features)
    max_f7 = max(f.f7_verb_content for f in features)
    w1, w2, w3, w4, w5, w6, w7, w8 = config.feature_weights
    raw = [
        w1 * _scaled(f.f1_num_words, max_f1)
        + w2 * _scaled(f.f2_phrase_freq, max_f2)
        + w3 * _scaled(f.f3_max_word_freq, max_f3)
        + w4 * f.f4_sentence_location
        + w5 * f.f5_phrase_location
        + w6 * f.f6_relative_length
        + w7 * _scaled(f.f7_verb_content, max_f7)
        + w8 * f.f8_is_question
        for f in features
    ]
    order = sorted(
        range(len(candidates)),
        key=lambda i: (
            -raw[i],
            -len(candidates[i].lemmas),
            candidates[i].first_occurrence,
            candidates[i].lemmas,
        ),
    )
    kept = order[: config.top_k]
    max_raw = raw[kept[0]]
    keyphrases = tuple(
        ScoredKeyphrase(
            lemmas=candidates[i].lemmas,
            # Degenerate all-zero scores normalize to a flat 1.0.
            local_score=raw[i] / max_raw if max_raw > 0 else 1.0,
            source_doc=document.doc_id,
            first_sentence=candidates[i].first_occurrence[0],
        )
        for i in kept
    )
    return DocumentProfile(
        doc_id=document.doc_id,
        keyphrases=keyphrases,
        length_sentences=len(document.sentences),
    )


def build_profiles(cluster: Cluster, config: ExtractorConfig) -> tuple[DocumentProfile, ...]:
    return tuple(score_keyphrases(doc, config) for doc in cluster.documents)


def load_stopwords(path: str | Path, normalizer: Normalizer | None = None) -> frozenset[str]:
    """Read a stopword file, one lemma per line, skipping blank lines."""
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            entries.append(normalizer.normalize(line) if normalizer else line)
    return frozenset(entries)


def read_extractor_config(
    path: str | Path, normalizer: Normalizer | None = None
) -> ExtractorConfig:
    """Parse a ``key = value`` config file.

    Recognized keys: ``weights.f1`` .. ``weights.f8``, ``stopwords`` (path
    to a stopword file, resolved against the config file's directory when
    relative), ``top_k``, ``max_ngram``.  Blank lines and ``#`` comments
    are ignored; unknown keys are an error.
    """
    path = Path(path)
    weights = list(DEFAULT_WEIGHTS)
    stopwords: frozenset[str] = frozenset()
    top_k = 15
    max_ngram = 3
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key = key.strip()
        value = value.strip()
        if key.startswith("weights.f"):
            index = key[len("weights.f"):]
            if index not in {"1", "2", "3", "4", "5", "6", "7", "8"}:
                raise ValueError(f"{path}:{lineno}: unknown weight {key!r}")
            weights[int(index) - 1] = float(value)
        elif key == "stopwords":
            stop_path = Path(value)
            if not stop_path.is_absolute():
                stop_path = path.parent / stop_path
            stopwords = load_stopwords(stop_path, normalizer)
        elif key == "top_k":
            top_k = int(value)
        elif key == "max_ngram":
            max_ngram = int(value)
        else:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return ExtractorConfig(
        feature_weights=tuple(weights),
        stopwords=stopwords,
        top_k=top_k,
        max_ngram=max_ngram,
    )
