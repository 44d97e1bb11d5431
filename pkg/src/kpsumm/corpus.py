"""Cluster loading and text preprocessing.

A cluster is a directory of UTF-8 ``.txt`` files, one document per file
(the file name minus extension becomes the document id).  Text is split
into sentences at terminal punctuation and line breaks, tokenized into
maximal letter/digit runs, and every token is mapped to a lemma by a
pluggable, deterministic normalizer.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

__all__ = [
    "Sentence",
    "Document",
    "Cluster",
    "Normalizer",
    "get_normalizer",
    "register_normalizer",
    "null_verb_tagger",
    "segment_sentences",
    "tokenize",
    "document_from_text",
    "load_cluster",
]

# Sentence-final marks: period, exclamation, Latin and Arabic question marks.
_TERMINATORS = ".!?؟"
_CHUNK = re.compile(rf"[^{_TERMINATORS}]*[{_TERMINATORS}]+|[^{_TERMINATORS}]+")
_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)

# A verb tagger estimates how many verbs a token sequence contains. The
# default knows nothing and returns 0, which disables the verb-content
# feature unless its weight is also zero anyway.
VerbTagger = Callable[[Sequence[str]], int]


def null_verb_tagger(tokens: Sequence[str]) -> int:
    return 0


def _nfc_casefold(token: str) -> str:
    return unicodedata.normalize("NFC", token).casefold()


_ARABIC_PREFIXES = ("وال", "بال", "كال", "فال", "ال")
_SUFFIXES = ("ing", "ed", "es", "s", "ات", "ون", "ين", "ة")


def _light_stem(token: str) -> str:
    """Crude affix stripper on top of the default normalization.

    Removes one common Arabic article prefix and one common English or
    Arabic suffix when enough stem remains. Meant as a demonstration of
    the pluggable normalizer slot, not as a serious lemmatizer.
    """
    t = _nfc_casefold(token)
    for pre in _ARABIC_PREFIXES:
        if t.startswith(pre) and len(t) >= len(pre) + 2:
            t = t[len(pre):]
            break
    for suf in _SUFFIXES:
        if t.endswith(suf) and len(t) >= len(suf) + 3:
            t = t[: -len(suf)]
            break
    return t


@dataclass(frozen=True)
class Normalizer:
    """Deterministic token -> lemma mapping.

    ``normalize`` never returns an empty lemma for a non-empty token; if
    the wrapped function strips a token to nothing, the casefolded token
    is used instead.
    """

    name: str
    fn: Callable[[str], str]

    def normalize(self, token: str) -> str:
        lemma = self.fn(token)
        return lemma if lemma else _nfc_casefold(token)


_NORMALIZERS: dict[str, Normalizer] = {
    "default": Normalizer("default", _nfc_casefold),
    "light-stem": Normalizer("light-stem", _light_stem),
}


def register_normalizer(normalizer: Normalizer) -> None:
    _NORMALIZERS[normalizer.name] = normalizer


def get_normalizer(name: str) -> Normalizer:
    try:
        return _NORMALIZERS[name]
    except KeyError:
        known = ", ".join(sorted(_NORMALIZERS))
        raise ValueError(f"unknown normalizer {name!r} (available: {known})") from None


@dataclass(frozen=True)
class Sentence:
    """One sentence of a document.

    ``boundaries`` holds gap indices where punctuation separates adjacent
    tokens: gap ``i`` sits between ``tokens[i]`` and ``tokens[i + 1]``.
    Candidate phrases may not span such a gap.
    """

    index: int
    raw_text: str
    tokens: tuple[str, ...]
    lemmas: tuple[str, ...]
    boundaries: frozenset[int]
    is_question: bool
    verb_count: int


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple[Sentence, ...]

    @property
    def length_sentences(self) -> int:
        return len(self.sentences)


@dataclass(frozen=True)
class Cluster:
    cluster_id: str
    documents: tuple[Document, ...]

    def __post_init__(self) -> None:
        if not self.documents:
            raise ValueError("a cluster must contain at least one document")
        ids = [d.doc_id for d in self.documents]
        if len(set(ids)) != len(ids):
            raise ValueError("document ids must be unique within a cluster")


def segment_sentences(text: str) -> list[str]:
    """Split text into sentences.

    A sentence ends after a run of terminal punctuation (``. ! ?`` or the
    Arabic question mark) or at a line break. The terminator stays attached
    and surrounding whitespace is stripped, so joining the pieces preserves
    every non-whitespace character of the input. Abbreviations receive no
    special treatment: "Dr. Smith" splits after "Dr.".
    """
    sentences: list[str] = []
    for line in text.splitlines():
        for chunk in _CHUNK.findall(line):
            chunk = chunk.strip()
            if chunk:
                sentences.append(chunk)
    return sentences


def tokenize(sentence_text: str) -> tuple[tuple[str, ...], frozenset[int]]:
    """Split a sentence into tokens plus punctuation gap markers.

    Tokens are maximal runs of Unicode letters and digits. Any non-space
    character between two adjacent tokens marks the gap between them as a
    phrase boundary.
    """
    tokens: list[str] = []
    boundaries: set[int] = set()
    last_end: int | None = None
    for match in _TOKEN.finditer(sentence_text):
        if last_end is not None and sentence_text[last_end : match.start()].strip():
            boundaries.add(len(tokens) - 1)
        tokens.append(match.group())
        last_end = match.end()
    return tuple(tokens), frozenset(boundaries)


def _build_sentence(
    index: int, raw_text: str, normalizer: Normalizer, verb_tagger: VerbTagger
) -> Sentence:
    tokens, boundaries = tokenize(raw_text)
    lemmas = tuple(normalizer.normalize(t) for t in tokens)
    is_question = raw_text.rstrip().endswith(("?", "؟"))
    return Sentence(
        index=index,
        raw_text=raw_text,
        tokens=tokens,
        lemmas=lemmas,
        boundaries=boundaries,
        is_question=is_question,
        verb_count=verb_tagger(tokens),
    )


def document_from_text(
    doc_id: str,
    text: str,
    normalizer: Normalizer,
    verb_tagger: VerbTagger = null_verb_tagger,
) -> Document:
    raws = segment_sentences(text)
    sentences = tuple(
        _build_sentence(i, raw, normalizer, verb_tagger) for i, raw in enumerate(raws)
    )
    return Document(doc_id=doc_id, sentences=sentences)


def load_cluster(
    directory: str | Path,
    normalizer: Normalizer,
    verb_tagger: VerbTagger = null_verb_tagger,
) -> Cluster:
    """Load every ``*.txt`` file of a directory as one document each.

    Documents are ordered by file name. Raises ValueError when the
    directory is missing, contains no ``.txt`` files, or a file cannot be
    read as UTF-8.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ValueError(f"not a directory: {directory}")
    paths = sorted(directory.glob("*.txt"))
    if not paths:
        raise ValueError(f"no documents in {directory}")
    documents = []
    for path in paths:
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ValueError(f"unreadable file {path}: {exc}") from exc
        documents.append(document_from_text(path.stem, text, normalizer, verb_tagger))
    return Cluster(cluster_id=directory.name, documents=tuple(documents))
