#!/usr/bin/env python3
"""Sweep technique, topic score mode, and overlap threshold on a cluster.

Reports one TSV row per setting: word count, sentence count, number of
distinct topics covered by the summary, and the centroid fraction. Useful
for eyeballing how the redundancy filter and the score modes trade off
coverage against concentration on the centroid document.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from kpsumm import (
    ExtractorConfig,
    SummaryConfig,
    Technique,
    TopicScoreMode,
    get_normalizer,
    load_cluster,
    load_stopwords,
    summarize_cluster,
)

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cluster", type=Path, default=ROOT / "data" / "fixture_cluster")
    parser.add_argument("--stopwords", type=Path, default=ROOT / "data" / "stopwords_en.txt")
    parser.add_argument("--min-words", type=int, default=280)
    parser.add_argument("--max-words", type=int, default=290)
    args = parser.parse_args()

    normalizer = get_normalizer("default")
    cluster = load_cluster(args.cluster, normalizer)
    extractor = ExtractorConfig(stopwords=load_stopwords(args.stopwords, normalizer))

    print("technique\tmode\toverlap\twords\tsentences\ttopics_covered\tcentroid_fraction")
    for technique in Technique:
        thresholds = [0.3, 0.5, 0.8] if technique is Technique.SEN_RICH else [0.5]
        for mode in TopicScoreMode:
            for threshold in thresholds:
                config = SummaryConfig(
                    technique=technique,
                    min_words=args.min_words,
                    max_words=args.max_words,
                    overlap_threshold=threshold,
                    topic_score_mode=mode,
                )
                summary, _, _ = summarize_cluster(cluster, extractor, config)
                covered = set()
                for sentence in summary.sentences:
                    covered.update(sentence.contributing_topics)
                print(
                    f"{technique.value}\t{mode.value}\t{threshold}"
                    f"\t{summary.word_count}\t{len(summary.sentences)}"
                    f"\t{len(covered)}\t{summary.centroid_fraction:.3f}"
                )


if __name__ == "__main__":
    main()
