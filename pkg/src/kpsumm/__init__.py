"""Keyphrase-centroid multi-document extractive summarization toolkit."""

from .corpus import (
    Cluster,
    Document,
    Normalizer,
    Sentence,
    document_from_text,
    get_normalizer,
    load_cluster,
    register_normalizer,
    segment_sentences,
    tokenize,
)
from .keyphrases import (
    DocumentProfile,
    ExtractorConfig,
    ScoredKeyphrase,
    build_profiles,
    load_stopwords,
    read_extractor_config,
    score_keyphrases,
)
from .rouge import RougeResult, RougeScore, evaluate_layout, prepare_text, rouge_n, rouge_s
from .summarize import (
    Summary,
    SummaryConfig,
    SummarySentence,
    Technique,
    extract_doc_rich,
    extract_sen_rich,
    sentence_topic_score,
    summarize_cluster,
    summary_report_lines,
    summary_text,
    unit_overlap,
)
from .topics import (
    ClusterTopic,
    DocumentRelevance,
    TopicScoreMode,
    score_topics,
    topic_table_tsv,
)

__version__ = "0.1.0"

__all__ = [
    "Cluster",
    "ClusterTopic",
    "Document",
    "DocumentProfile",
    "DocumentRelevance",
    "ExtractorConfig",
    "Normalizer",
    "RougeResult",
    "RougeScore",
    "ScoredKeyphrase",
    "Sentence",
    "Summary",
    "SummaryConfig",
    "SummarySentence",
    "Technique",
    "TopicScoreMode",
    "build_profiles",
    "document_from_text",
    "evaluate_layout",
    "extract_doc_rich",
    "extract_sen_rich",
    "get_normalizer",
    "load_cluster",
    "load_stopwords",
    "prepare_text",
    "read_extractor_config",
    "register_normalizer",
    "rouge_n",
    "rouge_s",
    "score_keyphrases",
    "score_topics",
    "segment_sentences",
    "sentence_topic_score",
    "summarize_cluster",
    "summary_report_lines",
    "summary_text",
    "tokenize",
    "topic_table_tsv",
    "unit_overlap",
]
