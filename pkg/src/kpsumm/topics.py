"""Cluster topic table: merge per-document keyphrases and score them.

Every distinct phrase key across the cluster becomes one topic carrying,
in order of refinement:

  mcs   largest local score among the documents containing the phrase
  nf    document frequency divided by the cluster maximum frequency
  cts   nf * mcs, balancing local importance against cluster relevance
  ts    final score per mode: mcs, cts, or cds(source document) * cts

Documents get a centroid score ``cds``, the mean cluster frequency of
their keyphrases, which rewards documents sharing many phrases with the
rest of the cluster.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, Sequence

from .keyphrases import DocumentProfile

__all__ = [
    "TopicScoreMode",
    "ClusterTopic",
    "DocumentRelevance",
    "union_topics",
    "centroid_topic_score",
    "link_score",
    "centroid_document_score",
    "max_centroid_topic_score",
    "score_topics",
    "topic_table_tsv",
]


class TopicScoreMode(Enum):
    MCS = "mcs"
    CTS = "cts"
    MAXCRTS = "maxcrts"


@dataclass(frozen=True)
class ClusterTopic:
    lemmas: tuple[str, ...]
    mcs: float
    freq: int
    source_doc: str
    nf: float = 0.0
    cts: float = 0.0
    ts: float = 0.0

    @property
    def key(self) -> str:
        return " ".join(self.lemmas)


@dataclass(frozen=True)
class DocumentRelevance:
    doc_id: str
    cds: float
    link_scores: dict[str, int]


def union_topics(
    profiles: Sequence[DocumentProfile],
    relevances: Mapping[str, DocumentRelevance] | None = None,
) -> list[ClusterTopic]:
    """One topic per distinct phrase key across all profiles.

    ``mcs`` is the best matching local score and ``freq`` the number of
    documents whose profile contains the key.  The source document is the
    one supplying ``mcs``; ties go to the document with the higher
    centroid score when relevances are available, then to the
    lexicographically smaller doc id.
    """
    if not profiles:
        raise ValueError("at least one document profile is required")
    by_key: dict[tuple[str, ...], list[tuple[str, float]]] = {}
    for profile in profiles:
        for phrase in profile.keyphrases:
            by_key.setdefault(phrase.lemmas, []).append(
                (profile.doc_id, phrase.local_score)
            )
    topics = []
    for key in sorted(by_key):
        entries = by_key[key]
        mcs = max(score for _, score in entries)
        candidates = [doc_id for doc_id, score in entries if score == mcs]
        if relevances is not None:
            source = min(candidates, key=lambda d: (-relevances[d].cds, d))
        else:
            source = min(candidates)
        topics.append(
            ClusterTopic(lemmas=key, mcs=mcs, freq=len(entries), source_doc=source)
        )
    return topics


def centroid_topic_score(topics: Sequence[ClusterTopic]) -> list[ClusterTopic]:
    """Fill nf = freq / max(freq) and cts = nf * mcs."""
    max_freq = max(t.freq for t in topics)
    return [
        replace(t, nf=t.freq / max_freq, cts=(t.freq / max_freq) * t.mcs)
        for t in topics
    ]


def link_score(profile_a: DocumentProfile, profile_b: DocumentProfile) -> int:
    """Number of phrase keys the two documents share."""
    return len(profile_a.phrase_keys() & profile_b.phrase_keys())


def centroid_document_score(
    profile: DocumentProfile, all_profiles: Sequence[DocumentProfile]
) -> DocumentRelevance:
    """Mean cluster frequency of the document's keyphrases.

    Because keyphrases are unique within a document, this equals one plus
    the mean pairwise link score; the pairwise counts are kept alongside
    for reporting.
    """
    freq = Counter()
    for other in all_profiles:
        freq.update(other.phrase_keys())
    total = sum(freq[phrase.lemmas] for phrase in profile.keyphrases)
    links = {
        other.doc_id: link_score(profile, other)
        for other in all_profiles
        if other.doc_id != profile.doc_id
    }
    return DocumentRelevance(
        doc_id=profile.doc_id, cds=total / profile.np, link_scores=links
    )


def max_centroid_topic_score(
    topics: Sequence[ClusterTopic],
    relevances: Mapping[str, DocumentRelevance],
    mode: TopicScoreMode = TopicScoreMode.MAXCRTS,
) -> list[ClusterTopic]:
    """Fill the final topic score and sort by it.

    MAXCRTS multiplies cts by the centroid score of the topic's source
    document, giving phrases from central documents a bonus.  Ties order
    by higher frequency, then by lemma key.
    """
    def final(t: ClusterTopic) -> float:
        if mode is TopicScoreMode.MCS:
            return t.mcs
        if mode is TopicScoreMode.CTS:
            return t.cts
        return relevances[t.source_doc].cds * t.cts

    scored = [replace(t, ts=final(t)) for t in topics]
    return sorted(scored, key=lambda t: (-t.ts, -t.freq, t.lemmas))


def score_topics(
    profiles: Sequence[DocumentProfile],
    mode: TopicScoreMode = TopicScoreMode.MAXCRTS,
) -> tuple[list[ClusterTopic], dict[str, DocumentRelevance]]:
    """Run the whole topic scoring pipeline over a set of profiles."""
    relevances = {
        p.doc_id: centroid_document_score(p, profiles) for p in profiles
    }
    topics = union_topics(profiles, relevances)
    topics = centroid_topic_score(topics)
    topics = max_centroid_topic_score(topics, relevances, mode)
    return topics, relevances


def topic_table_tsv(
    topics: Sequence[ClusterTopic], relevances: Mapping[str, DocumentRelevance]
) -> str:
    """Render the topic table as TSV, one row per topic in score order."""
    lines = ["key\tmcs\tfreq\tnf\tcts\tcds\tts"]
    for t in topics:
        cds = relevances[t.source_doc].cds
        lines.append(
            f"{t.key}\t{t.mcs:.6f}\t{t.freq}\t{t.nf:.6f}\t{t.cts:.6f}"
            f"\t{cds:.6f}\t{t.ts:.6f}"
        )
    return "\n".join(lines) + "\n"
