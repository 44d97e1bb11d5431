"""Summary extraction under a word budget.

Two techniques share the topic table but differ in what they prefer:

``sen-rich``
    Ranks every sentence by the sum of the scores of the topics it
    contains, then greedily selects down the ranking while filtering
    near-duplicates with a topic-set Jaccard overlap threshold.

``doc-rich``
    Walks the topics in score order and, for each one, takes the first
    sentence containing it from the most central documents, so the
    summary follows the flow of the centroid document.

Word counts are token counts; sentences are never truncated or rewritten.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .corpus import Cluster, Sentence
from .keyphrases import ExtractorConfig, build_profiles
from .topics import (
    ClusterTopic,
    DocumentRelevance,
    TopicScoreMode,
    score_topics,
)

__all__ = [
    "Technique",
    "SummaryConfig",
    "SummarySentence",
    "Summary",
    "topic_in_lemmas",
    "contributing_topics",
    "sentence_topic_score",
    "unit_overlap",
    "extract_sen_rich",
    "extract_doc_rich",
    "summarize_cluster",
    "summary_text",
    "summary_report_lines",
]

log = logging.getLogger(__name__)


class Technique(Enum):
    SEN_RICH = "sen-rich"
    DOC_RICH = "doc-rich"


@dataclass(frozen=True)
class SummaryConfig:
    technique: Technique = Technique.SEN_RICH
    min_words: int = 240
    max_words: int = 250
    overlap_threshold: float = 0.5  # sen-rich only
    topic_score_mode: TopicScoreMode = TopicScoreMode.MAXCRTS

    def __post_init__(self) -> None:
        if not 0 < self.min_words <= self.max_words:
            raise ValueError("need 0 < min_words <= max_words")
        if not 0.0 <= self.overlap_threshold <= 1.0:
            raise ValueError("overlap_threshold must lie in [0, 1]")


@dataclass(frozen=True)
class SummarySentence:
    text: str
    source_doc: str
    position: int
    score: float
    contributing_topics: tuple[str, ...]
    word_count: int


@dataclass(frozen=True)
class Summary:
    sentences: tuple[SummarySentence, ...]
    word_count: int
    technique: Technique
    shortfall: bool
    centroid_fraction: float


def topic_in_lemmas(key: tuple[str, ...], lemmas: Sequence[str]) -> bool:
    """True when the topic's lemma sequence occurs contiguously."""
    n = len(key)
    if n == 0 or n > len(lemmas):
        return False
    first = key[0]
    for start in range(len(lemmas) - n + 1):
        if lemmas[start] == first and tuple(lemmas[start : start + n]) == key:
            return True
    return False


def contributing_topics(
    sentence: Sentence, topics: Sequence[ClusterTopic]
) -> tuple[ClusterTopic, ...]:
    return tuple(t for t in topics if topic_in_lemmas(t.lemmas, sentence.lemmas))


def sentence_topic_score(sentence: Sentence, topics: Sequence[ClusterTopic]) -> float:
    """Sum of topic scores present in the sentence, each topic once."""
    return math.fsum(t.ts for t in contributing_topics(sentence, topics))


def _jaccard(a: frozenset, b: frozenset) -> float:
    if not a and not b:
        return 0.0
    inter = len(a & b)
    return inter / (len(a) + len(b) - inter)


def unit_overlap(x: SummarySentence, y: SummarySentence) -> float:
    """Jaccard similarity of the topic key sets of two summary sentences.

    Defined as 0 when both sets are empty.
    """
    return _jaccard(frozenset(x.contributing_topics), frozenset(y.contributing_topics))


def _centroid_doc(relevances: Mapping[str, DocumentRelevance]) -> str:
    return min(relevances, key=lambda d: (-relevances[d].cds, d))


def _centroid_fraction(
    sentences: Sequence[SummarySentence], relevances: Mapping[str, DocumentRelevance]
) -> float:
    if not sentences:
        return 0.0
    centroid = _centroid_doc(relevances)
    return sum(1 for s in sentences if s.source_doc == centroid) / len(sentences)


def _presentation_order(
    sentences: Sequence[SummarySentence], relevances: Mapping[str, DocumentRelevance]
) -> tuple[SummarySentence, ...]:
    # Group by source document, most central first, then document order.
    return tuple(
        sorted(
            sentences,
            key=lambda s: (-relevances[s.source_doc].cds, s.source_doc, s.position),
        )
    )


def extract_sen_rich(
    cluster: Cluster,
    topics: Sequence[ClusterTopic],
    relevances: Mapping[str, DocumentRelevance],
    config: SummaryConfig,
) -> Summary:
    """Rank sentences by topic richness and select under the budget.

    The walk down the ranking skips a sentence when its topic-set overlap
    with any already selected sentence exceeds the threshold, or when its
    words would push the total past ``max_words``.  Once ``min_words`` is
    reached, the first candidate that no longer fits ends the walk.
    Sentences containing no topic are never candidates.
    """
    cds = {doc_id: rel.cds for doc_id, rel in relevances.items()}
    candidates = []
    for document in cluster.documents:
        for sentence in document.sentences:
            present = contributing_topics(sentence, topics)
            if not present:
                continue
            score = math.fsum(t.ts for t in present)
            candidates.append(
                SummarySentence(
                    text=sentence.raw_text,
                    source_doc=document.doc_id,
                    position=sentence.index,
                    score=score,
                    contributing_topics=tuple(t.key for t in present),
                    word_count=len(sentence.tokens),
                )
            )
    candidates.sort(
        key=lambda s: (-s.score, -cds[s.source_doc], s.source_doc, s.position)
    )
    selected: list[SummarySentence] = []
    chosen_sets: list[frozenset[str]] = []
    total = 0
    for cand in candidates:
        if total + cand.word_count > config.max_words:
            if total >= config.min_words:
                break
            continue
        cand_set = frozenset(cand.contributing_topics)
        if any(
            _jaccard(cand_set, prev) > config.overlap_threshold
            for prev in chosen_sets
        ):
            continue
        selected.append(cand)
        chosen_sets.append(cand_set)
        total += cand.word_count
    return Summary(
        sentences=_presentation_order(selected, relevances),
        word_count=total,
        technique=Technique.SEN_RICH,
        shortfall=total < config.min_words,
        centroid_fraction=_centroid_fraction(selected, relevances),
    )


def extract_doc_rich(
    cluster: Cluster,
    topics: Sequence[ClusterTopic],
    relevances: Mapping[str, DocumentRelevance],
    config: SummaryConfig,
) -> Summary:
    """One sentence per topic, preferring central documents.

    Topics are visited in score order; for each one the documents are
    scanned in centroid order and the first sentence containing the topic
    is appended, unless that exact sentence is already in the list.  The
    appended sequence is then cut to the longest prefix whose word count
    fits ``max_words``, and presented grouped by document.
    """
    cds = {doc_id: rel.cds for doc_id, rel in relevances.items()}
    doc_order = sorted(cluster.documents, key=lambda d: (-cds[d.doc_id], d.doc_id))
    topic_order = sorted(topics, key=lambda t: (-t.ts, -t.freq, t.lemmas))
    appended: list[SummarySentence] = []
    seen: set[tuple[str, int]] = set()
    for topic in topic_order:
        hit: tuple[str, Sentence] | None = None
        for document in doc_order:
            for sentence in document.sentences:
                if topic_in_lemmas(topic.lemmas, sentence.lemmas):
                    hit = (document.doc_id, sentence)
                    break
            if hit:
                break
        if hit is None:
            log.warning("topic %r occurs in no sentence; skipped", topic.key)
            continue
        doc_id, sentence = hit
        if (doc_id, sentence.index) in seen:
            continue
        seen.add((doc_id, sentence.index))
        appended.append(
            SummarySentence(
                text=sentence.raw_text,
                source_doc=doc_id,
                position=sentence.index,
                score=topic.ts,
                contributing_topics=tuple(
                    t.key for t in contributing_topics(sentence, topics)
                ),
                word_count=len(sentence.tokens),
            )
        )
    kept: list[SummarySentence] = []
    total = 0
    for sent in appended:
        if total + sent.word_count > config.max_words:
            break
        kept.append(sent)
        total += sent.word_count
    return Summary(
        sentences=_presentation_order(kept, relevances),
        word_count=total,
        technique=Technique.DOC_RICH,
        shortfall=total < config.min_words,
        centroid_fraction=_centroid_fraction(kept, relevances),
    )


def summarize_cluster(
    cluster: Cluster,
    extractor_config: ExtractorConfig,
    summary_config: SummaryConfig,
) -> tuple[Summary, list[ClusterTopic], dict[str, DocumentRelevance]]:
    """Full pipeline: profiles, topic table, then sentence extraction."""
    profiles = build_profiles(cluster, extractor_config)
    topics, relevances = score_topics(profiles, summary_config.topic_score_mode)
    if summary_config.technique is Technique.SEN_RICH:
        summary = extract_sen_rich(cluster, topics, relevances, summary_config)
    else:
        summary = extract_doc_rich(cluster, topics, relevances, summary_config)
    return summary, topics, relevances


def summary_text(summary: Summary) -> str:
    """Plain-text rendering, one sentence per line."""
    if not summary.sentences:
        return ""
    return "\n".join(s.text for s in summary.sentences) + "\n"


def summary_report_lines(
    summary: Summary,
    relevances: Mapping[str, DocumentRelevance],
    config: SummaryConfig,
) -> list[str]:
    """Line-oriented JSON provenance report.

    One ``document`` record per source document, one ``sentence`` record
    per selected sentence in presentation order, and a trailing
    ``summary`` record with the overall stats.
    """
    lines = []
    for doc_id in sorted(relevances, key=lambda d: (-relevances[d].cds, d)):
        rel = relevances[doc_id]
        lines.append(
            json.dumps(
                {
                    "type": "document",
                    "doc": doc_id,
                    "cds": rel.cds,
                    "links": dict(sorted(rel.link_scores.items())),
                },
                sort_keys=True,
                ensure_ascii=False,
            )
        )
    for s in summary.sentences:
        lines.append(
            json.dumps(
                {
                    "type": "sentence",
                    "doc": s.source_doc,
                    "position": s.position,
                    "score": s.score,
                    "words": s.word_count,
                    "topics": list(s.contributing_topics),
                    "text": s.text,
                },
                sort_keys=True,
                ensure_ascii=False,
            )
        )
    lines.append(
        json.dumps(
            {
                "type": "summary",
                "technique": summary.technique.value,
                "word_count": summary.word_count,
                "min_words": config.min_words,
                "max_words": config.max_words,
                "sentences": len(summary.sentences),
                "shortfall": summary.shortfall,
                "centroid_doc": _centroid_doc(relevances),
                "centroid_fraction": summary.centroid_fraction,
            },
            sort_keys=True,
            ensure_ascii=False,
        )
    )
    return lines
