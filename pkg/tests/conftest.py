from __future__ import annotations

from pathlib import Path

import pytest

from kpsumm.corpus import Cluster, document_from_text, get_normalizer

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_CLUSTER = REPO_ROOT / "data" / "fixture_cluster"
STOPWORDS_FILE = REPO_ROOT / "data" / "stopwords_en.txt"

NORM = get_normalizer("default")


def doc_from(doc_id: str, text: str):
    return document_from_text(doc_id, text, NORM)


def cluster_from(texts: dict[str, str]) -> Cluster:
    documents = tuple(doc_from(doc_id, texts[doc_id]) for doc_id in sorted(texts))
    return Cluster(cluster_id="test", documents=documents)


@pytest.fixture(scope="session")
def fixture_cluster():
    from kpsumm.corpus import load_cluster

    return load_cluster(FIXTURE_CLUSTER, NORM)


@pytest.fixture(scope="session")
def fixture_stopwords():
    from kpsumm.keyphrases import load_stopwords

    return load_stopwords(STOPWORDS_FILE, NORM)
