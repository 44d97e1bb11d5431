"""Command line interface: ``summarize``, ``topics``, and ``evaluate``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .corpus import Normalizer, get_normalizer, load_cluster
from .keyphrases import (
    ExtractorConfig,
    build_profiles,
    load_stopwords,
    read_extractor_config,
)
from .rouge import evaluate_layout
from .summarize import (
    SummaryConfig,
    Technique,
    summarize_cluster,
    summary_report_lines,
    summary_text,
)
from .topics import TopicScoreMode, score_topics, topic_table_tsv

__all__ = ["main", "build_parser", "RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    normalizer: Normalizer
    extractor: ExtractorConfig
    cluster_dir: Path | None = None
    eval_dir: Path | None = None
    out: Path | None = None
    report: Path | None = None
    summary: SummaryConfig | None = None
    max_skip: int | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpsumm",
        description="Keyphrase-centroid multi-document summarizer and ROUGE harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shared(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", type=Path, help="extractor config file (key = value lines)")
        p.add_argument("--normalizer", default="default", help="token normalizer name")
        p.add_argument("--stopwords", type=Path, help="stopword file, one lemma per line")
        p.add_argument("--out", type=Path, help="output path (default: stdout)")

    p_sum = sub.add_parser("summarize", help="summarize a cluster directory")
    p_sum.add_argument("cluster_dir", type=Path, help="directory of .txt documents")
    add_shared(p_sum)
    p_sum.add_argument(
        "--technique",
        choices=[t.value for t in Technique],
        default=Technique.SEN_RICH.value,
    )
    p_sum.add_argument("--min-words", type=int, default=240)
    p_sum.add_argument("--max-words", type=int, default=250)
    p_sum.add_argument("--overlap-threshold", type=float, default=0.5)
    p_sum.add_argument(
        "--topic-score",
        choices=[m.value for m in TopicScoreMode],
        default=TopicScoreMode.MAXCRTS.value,
    )
    p_sum.add_argument("--top-k", type=int, help="keyphrases kept per document")
    p_sum.add_argument(
        "--report",
        type=Path,
        help="provenance report path (default: <out>.report.jsonl when --out is set)",
    )

    p_top = sub.add_parser("topics", help="write the cluster topic table as TSV")
    p_top.add_argument("cluster_dir", type=Path, help="directory of .txt documents")
    add_shared(p_top)

    p_eval = sub.add_parser("evaluate", help="score candidate summaries against references")
    p_eval.add_argument(
        "eval_dir", type=Path, help="directory containing candidates/ and references/"
    )
    add_shared(p_eval)
    p_eval.add_argument(
        "--max-skip",
        type=int,
        help="max tokens a skip-bigram may skip (default: unbounded)",
    )
    return parser


def _extractor_from_args(args: argparse.Namespace, normalizer: Normalizer) -> ExtractorConfig:
    if args.config is not None:
        config = read_extractor_config(args.config, normalizer)
    else:
        config = ExtractorConfig()
    if args.stopwords is not None:
        config = replace(config, stopwords=load_stopwords(args.stopwords, normalizer))
    top_k = getattr(args, "top_k", None)
    if top_k is not None:
        config = replace(config, top_k=top_k)
    return config


def _make_run_config(args: argparse.Namespace) -> RunConfig:
    normalizer = get_normalizer(args.normalizer)
    extractor = _extractor_from_args(args, normalizer)
    if args.command == "summarize":
        summary = SummaryConfig(
            technique=Technique(args.technique),
            min_words=args.min_words,
            max_words=args.max_words,
            overlap_threshold=args.overlap_threshold,
            topic_score_mode=TopicScoreMode(args.topic_score),
        )
        return RunConfig(
            command="summarize",
            normalizer=normalizer,
            extractor=extractor,
            cluster_dir=args.cluster_dir,
            out=args.out,
            report=args.report,
            summary=summary,
        )
    if args.command == "topics":
        return RunConfig(
            command="topics",
            normalizer=normalizer,
            extractor=extractor,
            cluster_dir=args.cluster_dir,
            out=args.out,
        )
    return RunConfig(
        command="evaluate",
        normalizer=normalizer,
        extractor=extractor,
        eval_dir=args.eval_dir,
        out=args.out,
        max_skip=args.max_skip,
    )


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def run_summarize(config: RunConfig) -> int:
    cluster = load_cluster(config.cluster_dir, config.normalizer)
    assert config.summary is not None
    summary, _, relevances = summarize_cluster(cluster, config.extractor, config.summary)
    _emit(summary_text(summary), config.out)
    report_path = config.report
    if report_path is None and config.out is not None:
        report_path = Path(str(config.out) + ".report.jsonl")
    if report_path is not None:
        lines = summary_report_lines(summary, relevances, config.summary)
        report_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def run_topics(config: RunConfig) -> int:
    cluster = load_cluster(config.cluster_dir, config.normalizer)
    profiles = build_profiles(cluster, config.extractor)
    topics, relevances = score_topics(profiles)
    _emit(topic_table_tsv(topics, relevances), config.out)
    return 0


def run_evaluate(config: RunConfig) -> int:
    detail, aggregate = evaluate_layout(
        config.eval_dir, config.normalizer, config.max_skip
    )
    lines = ["system\tcluster\tmeasure\tprecision\trecall\tf_measure"]
    for system, cluster, measure, p, r, f in detail:
        lines.append(f"{system}\t{cluster}\t{measure}\t{p:.4f}\t{r:.4f}\t{f:.4f}")
    lines.append("")
    lines.append("system\tmeasure\tprecision\trecall\tf_measure")
    for system, measure, p, r, f in aggregate:
        lines.append(f"{system}\t{measure}\t{p:.4f}\t{r:.4f}\t{f:.4f}")
    _emit("\n".join(lines) + "\n", config.out)
    return 0


_RUNNERS = {
    "summarize": run_summarize,
    "topics": run_topics,
    "evaluate": run_evaluate,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        config = _make_run_config(args)
        return _RUNNERS[config.command](config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
