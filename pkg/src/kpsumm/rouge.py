"""ROUGE-2 and ROUGE-S scoring of candidate summaries against references.

Counting is multiset based and never crosses sentence boundaries.  A
skip-bigram is an ordered token pair within one sentence; ``max_skip``
bounds how many tokens the pair may skip (``None`` allows any gap).
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus import Normalizer, segment_sentences, tokenize

__all__ = [
    "RougeScore",
    "RougeResult",
    "ngrams",
    "skip_bigrams",
    "text_ngrams",
    "text_skip_bigrams",
    "rouge_n",
    "rouge_s",
    "prepare_text",
    "evaluate_layout",
]

log = logging.getLogger(__name__)

# A text, for scoring purposes, is a sequence of sentences of lemmas.
LemmaText = Sequence[Sequence[str]]


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f_measure: float


@dataclass(frozen=True)
class RougeResult:
    """Aggregate over references: component-wise mean, best-F reference,
    and the individual per-reference scores."""

    mean: RougeScore
    best: RougeScore
    per_reference: tuple[RougeScore, ...]


def ngrams(lemmas: Sequence[str], n: int) -> Counter:
    """Contiguous n-grams of one sentence as a multiset."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Counter(
        tuple(lemmas[i : i + n]) for i in range(len(lemmas) - n + 1)
    )


def skip_bigrams(lemmas: Sequence[str], max_skip: int | None = None) -> Counter:
    """Ordered in-sentence pairs with at most ``max_skip`` tokens between."""
    counts: Counter = Counter()
    for i in range(len(lemmas)):
        for j in range(i + 1, len(lemmas)):
            if max_skip is not None and j - i - 1 > max_skip:
                break
            counts[(lemmas[i], lemmas[j])] += 1
    return counts


def text_ngrams(sentences: LemmaText, n: int) -> Counter:
    total: Counter = Counter()
    for sentence in sentences:
        total.update(ngrams(sentence, n))
    return total


def text_skip_bigrams(sentences: LemmaText, max_skip: int | None = None) -> Counter:
    total: Counter = Counter()
    for sentence in sentences:
        total.update(skip_bigrams(sentence, max_skip))
    return total


def _score(cand: Counter, ref: Counter) -> RougeScore:
    overlap = sum(min(count, ref[gram]) for gram, count in cand.items())
    cand_total = sum(cand.values())
    ref_total = sum(ref.values())
    precision = overlap / cand_total if cand_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    if precision + recall == 0.0:
        f_measure = 0.0
    else:
        f_measure = 2 * precision * recall / (precision + recall)
    return RougeScore(precision=precision, recall=recall, f_measure=f_measure)


def _aggregate(per_reference: list[RougeScore]) -> RougeResult:
    k = len(per_reference)
    mean = RougeScore(
        precision=math.fsum(s.precision for s in per_reference) / k,
        recall=math.fsum(s.recall for s in per_reference) / k,
        f_measure=math.fsum(s.f_measure for s in per_reference) / k,
    )
    best = max(per_reference, key=lambda s: s.f_measure)
    return RougeResult(mean=mean, best=best, per_reference=tuple(per_reference))


def _run(cand: Counter, ref_counts: list[Counter]) -> RougeResult:
    scores = []
    for i, ref in enumerate(ref_counts):
        if not ref:
            log.warning("reference %d contributes no counting units; skipped", i)
            continue
        scores.append(_score(cand, ref))
    if not scores:
        raise ValueError("every reference was empty")
    return _aggregate(scores)


def rouge_n(candidate: LemmaText, references: Sequence[LemmaText], n: int = 2) -> RougeResult:
    """Clipped n-gram overlap against each reference, averaged."""
    if not references:
        raise ValueError("at least one reference is required")
    return _run(text_ngrams(candidate, n), [text_ngrams(r, n) for r in references])


def rouge_s(
    candidate: LemmaText,
    references: Sequence[LemmaText],
    max_skip: int | None = None,
) -> RougeResult:
    """Clipped skip-bigram overlap against each reference, averaged."""
    if not references:
        raise ValueError("at least one reference is required")
    cand = text_skip_bigrams(candidate, max_skip)
    return _run(cand, [text_skip_bigrams(r, max_skip) for r in references])


def prepare_text(text: str, normalizer: Normalizer) -> tuple[tuple[str, ...], ...]:
    """Segment, tokenize, and normalize raw text for scoring."""
    prepared = []
    for raw in segment_sentences(text):
        tokens, _ = tokenize(raw)
        prepared.append(tuple(normalizer.normalize(t) for t in tokens))
    return tuple(prepared)


def evaluate_layout(
    root: str | Path,
    normalizer: Normalizer,
    max_skip: int | None = None,
) -> tuple[list[tuple], list[tuple]]:
    """Score a ``candidates/`` vs ``references/`` directory layout.

    Expects ``root/candidates/<cluster>/<system>.txt`` and
    ``root/references/<cluster>/<ref_id>.txt``.  Returns detail rows
    (system, cluster, measure, P, R, F) sorted by system, cluster and
    measure, plus aggregate rows (system, measure, P, R, F) averaged over
    clusters.
    """
    root = Path(root)
    cand_root = root / "candidates"
    ref_root = root / "references"
    if not cand_root.is_dir():
        raise ValueError(f"missing candidates directory under {root}")
    if not ref_root.is_dir():
        raise ValueError(f"missing references directory under {root}")
    clusters = sorted(p.name for p in cand_root.iterdir() if p.is_dir())
    if not clusters:
        raise ValueError(f"no cluster directories under {cand_root}")
    detail: list[tuple] = []
    for cluster in clusters:
        ref_dir = ref_root / cluster
        ref_paths = sorted(ref_dir.glob("*.txt")) if ref_dir.is_dir() else []
        if not ref_paths:
            raise ValueError(f"no references for cluster {cluster!r}")
        references = [
            prepare_text(p.read_text(encoding="utf-8"), normalizer) for p in ref_paths
        ]
        system_paths = sorted((cand_root / cluster).glob("*.txt"))
        if not system_paths:
            raise ValueError(f"no candidate summaries for cluster {cluster!r}")
        for path in system_paths:
            candidate = prepare_text(path.read_text(encoding="utf-8"), normalizer)
            r2 = rouge_n(candidate, references, n=2).mean
            rs = rouge_s(candidate, references, max_skip=max_skip).mean
            detail.append(
                (path.stem, cluster, "rouge-2", r2.precision, r2.recall, r2.f_measure)
            )
            detail.append(
                (path.stem, cluster, "rouge-s", rs.precision, rs.recall, rs.f_measure)
            )
    detail.sort(key=lambda row: (row[0], row[1], row[2]))
    grouped: dict[tuple[str, str], list[tuple]] = {}
    for row in detail:
        grouped.setdefault((row[0], row[2]), []).append(row)
    aggregate = []
    for (system, measure), rows in sorted(grouped.items()):
        k = len(rows)
        aggregate.append(
            (
                system,
                measure,
                math.fsum(r[3] for r in rows) / k,
                math.fsum(r[4] for r in rows) / k,
                math.fsum(r[5] for r in rows) / k,
            )
        )
    return detail, aggregate
