#!/usr/bin/env python3
"""End-to-end demo on the bundled fixture cluster.

Prints the head of the topic table, then both summaries with their stats.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from kpsumm import (
    ExtractorConfig,
    SummaryConfig,
    Technique,
    get_normalizer,
    load_cluster,
    load_stopwords,
    summarize_cluster,
    summary_text,
    topic_table_tsv,
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

    for technique in Technique:
        config = SummaryConfig(
            technique=technique, min_words=args.min_words, max_words=args.max_words
        )
        summary, topics, relevances = summarize_cluster(cluster, extractor, config)
        if technique is Technique.SEN_RICH:
            table = topic_table_tsv(topics, relevances).splitlines()
            print("top topics:")
            for line in table[:11]:
                print(" ", line)
            print()
        print(
            f"== {technique.value}: {summary.word_count} words, "
            f"{len(summary.sentences)} sentences, "
            f"centroid fraction {summary.centroid_fraction:.2f} =="
        )
        print(summary_text(summary))


if __name__ == "__main__":
    main()
