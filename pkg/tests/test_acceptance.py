"""Acceptance suite: one test per release criterion.

Each test prints a ``criterion N: PASS`` line on success; run with
``pytest tests/test_acceptance.py -v -s`` to see them.  Published
benchmark figures are not reproduced here (see criterion 1 and the
README); the pipeline is validated by exact brute-force oracles and
invariant sweeps instead.
"""

import json
import random
import time

from kpsumm.cli import main
from kpsumm.keyphrases import build_profiles
from kpsumm.rouge import rouge_n, rouge_s
from kpsumm.summarize import (
    SummaryConfig,
    SummarySentence,
    Technique,
    extract_doc_rich,
    extract_sen_rich,
    summary_report_lines,
    unit_overlap,
)
from kpsumm.topics import score_topics
from kpsumm.keyphrases import ExtractorConfig

import oracles
from conftest import FIXTURE_CLUSTER, REPO_ROOT, STOPWORDS_FILE, cluster_from

N_RANDOM_CLUSTERS = 25
FLOAT_TOL = 1e-12


def _ok(criterion: int, detail: str) -> None:
    print(f"criterion {criterion}: PASS ({detail})")


def _random_scored_clusters(seed: int, count: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        cluster, config, profiles = oracles.random_cluster(rng)
        topics, relevances = score_topics(profiles)
        table = oracles.oracle_topic_table(profiles)
        out.append((rng, cluster, config, profiles, topics, relevances, table))
    return out


def test_criterion_1_published_benchmarks_not_reproduced():
    # The comparison tables against TAC 2011 systems are out of desk-scale
    # reach: the Arabic sources, human references, and competitor outputs
    # are not redistributable, and the exact ROUGE parameterization behind
    # the published figures is unstated. The README must say so, and the
    # suite substitutes the property and oracle checks below.
    readme = " ".join((REPO_ROOT / "README.md").read_text(encoding="utf-8").split())
    assert "TAC 2011" in readme
    assert "not redistributable" in readme
    _ok(1, "README documents why published benchmark scores are out of scope")


def test_criterion_2_scoring_matches_bruteforce():
    started = time.perf_counter()
    checked = 0
    for _, _, _, profiles, topics, relevances, table in _random_scored_clusters(
        seed=42, count=N_RANDOM_CLUSTERS
    ):
        assert {t.lemmas for t in topics} == table["keys"]
        for t in topics:
            assert t.freq == table["freq"][t.lemmas]
            assert abs(t.mcs - table["mcs"][t.lemmas]) <= FLOAT_TOL
            assert abs(t.nf - table["nf"][t.lemmas]) <= FLOAT_TOL
            assert abs(t.cts - table["cts"][t.lemmas]) <= FLOAT_TOL
            assert abs(t.ts - table["ts"][t.lemmas]) <= FLOAT_TOL
        for doc_id, rel in relevances.items():
            assert abs(rel.cds - table["cds"][doc_id]) <= FLOAT_TOL
            for other, count in rel.link_scores.items():
                assert count == table["links"][(doc_id, other)]
        checked += 1
    elapsed = time.perf_counter() - started
    assert checked >= 20
    assert elapsed < 5.0
    _ok(2, f"{checked} random clusters matched the brute force in {elapsed:.2f}s")


def test_criterion_3_bound_invariants():
    violations = 0

    def check_cluster(profiles, topics, relevances):
        nonlocal violations
        d = len(profiles)
        for p in profiles:
            scores = [k.local_score for k in p.keyphrases]
            if not all(0.0 <= s <= 1.0 for s in scores) or max(scores) != 1.0:
                violations += 1
        if max(t.nf for t in topics) != 1.0:
            violations += 1
        for t in topics:
            if not (0.0 <= t.mcs <= 1.0 and 0.0 < t.nf <= 1.0 and 0.0 <= t.cts <= 1.0):
                violations += 1
        for rel in relevances.values():
            if not (1.0 <= rel.cds <= d):
                violations += 1

    runs = 0
    for _, _, _, profiles, topics, relevances, _ in _random_scored_clusters(
        seed=7, count=N_RANDOM_CLUSTERS
    ):
        check_cluster(profiles, topics, relevances)
        runs += 1

    from kpsumm.corpus import get_normalizer, load_cluster
    from kpsumm.keyphrases import load_stopwords

    normalizer = get_normalizer("default")
    fixture = load_cluster(FIXTURE_CLUSTER, normalizer)
    config = ExtractorConfig(stopwords=load_stopwords(STOPWORDS_FILE, normalizer))
    profiles = build_profiles(fixture, config)
    topics, relevances = score_topics(profiles)
    check_cluster(profiles, topics, relevances)
    runs += 1

    assert violations == 0
    _ok(3, f"0 bound violations across {runs} clusters")


def test_criterion_4_unit_overlap_properties():
    def sent(keys):
        return SummarySentence(
            text="", source_doc="d", position=0, score=0.0,
            contributing_topics=tuple(keys), word_count=1,
        )

    assert unit_overlap(sent(["a", "b", "c"]), sent(["b", "c", "d"])) == 0.5
    rng = random.Random(13)
    alphabet = [f"k{i}" for i in range(10)]
    for _ in range(500):
        a = sent(rng.sample(alphabet, rng.randint(0, 10)))
        b = sent(rng.sample(alphabet, rng.randint(0, 10)))
        value = unit_overlap(a, b)
        assert value == unit_overlap(b, a)
        assert 0.0 <= value <= 1.0
        if a.contributing_topics:
            assert unit_overlap(a, a) == 1.0
    _ok(4, "symmetry, identity, range, and the worked 0.5 value all hold")


def test_criterion_5_sen_rich_matches_bruteforce():
    for rng, cluster, _, _, topics, relevances, table in _random_scored_clusters(
        seed=42, count=N_RANDOM_CLUSTERS
    ):
        config = SummaryConfig(
            technique=Technique.SEN_RICH,
            min_words=rng.randint(3, 12),
            max_words=rng.randint(12, 40),
            overlap_threshold=rng.choice([0.2, 0.5, 0.8, 1.0]),
        )
        summary = extract_sen_rich(cluster, topics, relevances, config)
        _, presentation, total, _, _ = oracles.oracle_sen_rich(cluster, table, config)
        assert [(s.source_doc, s.position) for s in summary.sentences] == presentation
        assert summary.word_count == total <= config.max_words
        for i, x in enumerate(summary.sentences):
            for y in summary.sentences[i + 1 :]:
                assert unit_overlap(x, y) <= config.overlap_threshold
    _ok(5, f"selection matched the rank-then-skip replay on {N_RANDOM_CLUSTERS} clusters")


def test_criterion_6_doc_rich_properties():
    for rng, cluster, _, _, topics, relevances, _ in _random_scored_clusters(
        seed=99, count=N_RANDOM_CLUSTERS
    ):
        config = SummaryConfig(
            technique=Technique.DOC_RICH,
            min_words=rng.randint(3, 12),
            max_words=rng.randint(12, 40),
        )
        summary = extract_doc_rich(cluster, topics, relevances, config)
        pairs = [(s.source_doc, s.position) for s in summary.sentences]
        assert len(pairs) == len(set(pairs))
        assert len(summary.sentences) <= len(topics)

    # A cluster whose centroid document holds the union of all phrases:
    # the summary must come entirely from it.
    cluster = cluster_from(
        {
            "a": "tide wave storm. port city alert.",
            "b": "tide wave storm.",
            "c": "port city alert.",
        }
    )
    profiles = build_profiles(cluster, ExtractorConfig())
    topics, relevances = score_topics(profiles)
    config = SummaryConfig(technique=Technique.DOC_RICH, min_words=1, max_words=100)
    summary = extract_doc_rich(cluster, topics, relevances, config)
    assert summary.sentences
    assert summary.centroid_fraction == 1.0

    # The structured report exposes the centroid fraction for comparison
    # against corpus statistics on user-supplied data.
    report = summary_report_lines(summary, relevances, config)
    tail = json.loads(report[-1])
    assert tail["centroid_fraction"] == 1.0
    _ok(6, "no duplicates, one sentence per topic, centroid fraction 1.0 and reported")


def test_criterion_7_rouge_matches_bruteforce():
    rng = random.Random(2024)
    vocab = ["a", "b", "c", "d", "e", "f"]
    for _ in range(300):
        cand = [rng.choice(vocab) for _ in range(rng.randint(3, 10))]
        ref = [rng.choice(vocab) for _ in range(rng.randint(3, 10))]
        n = rng.randint(1, 3)
        max_skip = rng.choice([None, 0, 1, 4])
        result_n = rouge_n([tuple(cand)], [[tuple(ref)]], n=n)
        expected = oracles.oracle_clipped_prf(
            oracles.oracle_ngrams(cand, n), oracles.oracle_ngrams(ref, n)
        )
        got = result_n.per_reference[0]
        assert (got.precision, got.recall, got.f_measure) == expected
        result_s = rouge_s([tuple(cand)], [[tuple(ref)]], max_skip=max_skip)
        expected_s = oracles.oracle_clipped_prf(
            oracles.oracle_skip_bigrams(cand, max_skip),
            oracles.oracle_skip_bigrams(ref, max_skip),
        )
        got_s = result_s.per_reference[0]
        assert (got_s.precision, got_s.recall, got_s.f_measure) == expected_s

    self_text = [("x", "y", "z")]
    assert rouge_n(self_text, [self_text], 2).mean.f_measure == 1.0
    assert rouge_s(self_text, [self_text]).mean.f_measure == 1.0
    assert rouge_n([("a", "b")], [[("c", "d")]], 2).mean.f_measure == 0.0
    assert rouge_s([("a", "b")], [[("c", "d")]]).mean.f_measure == 0.0
    worked = rouge_s([("a", "b", "c")], [[("a", "c", "b")]])
    assert worked.mean.precision == 2 / 3
    assert worked.mean.recall == 2 / 3
    _ok(7, "counts matched enumeration on 300 short texts plus the worked examples")


def test_criterion_8_end_to_end_determinism_and_budget(tmp_path):
    assert len(list(FIXTURE_CLUSTER.glob("*.txt"))) == 10
    timings = []
    for technique in ("sen-rich", "doc-rich"):
        outputs = []
        for run in (1, 2):
            out = tmp_path / f"{technique}-{run}.txt"
            started = time.perf_counter()
            code = main(
                [
                    "summarize",
                    str(FIXTURE_CLUSTER),
                    "--technique",
                    technique,
                    "--min-words",
                    "280",
                    "--max-words",
                    "290",
                    "--stopwords",
                    str(STOPWORDS_FILE),
                    "--out",
                    str(out),
                ]
            )
            timings.append(time.perf_counter() - started)
            assert code == 0
            report = tmp_path / f"{technique}-{run}.txt.report.jsonl"
            outputs.append(out.read_bytes() + report.read_bytes())
            tail = json.loads(report.read_text(encoding="utf-8").splitlines()[-1])
            assert 280 <= tail["word_count"] <= 290
        assert outputs[0] == outputs[1]
    assert max(timings) < 1.0
    _ok(
        8,
        f"both techniques byte-identical within budget, slowest run {max(timings)*1000:.0f}ms",
    )
