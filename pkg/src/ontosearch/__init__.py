"""Ontology-driven semantic query expansion and metasearch re-ranking.

The pipeline: analyze a natural-language university-domain query, expand it
with lexical synonyms and ontology-derived domain keywords, generate refined
queries, retrieve results from a pluggable backend, then filter and fuse the
per-query result lists into one semantically re-ranked list.
"""

from ontosearch.textanalysis import (
    AnalyzedQuery,
    Analyzer,
    NounPhrase,
    TagLexicon,
    Token,
    chunk_noun_phrases,
    classify_location,
    load_stoplist,
    pos_tag,
    remove_stop_words,
    tokenize,
)
from ontosearch.wordnet import Lexicon, Synset, SynonymEntry, WordNetError, load_wordnet
from ontosearch.ontology import (
    Concept,
    ConceptGraph,
    ConceptMatch,
    DomainKeywordSet,
    OntologyError,
    extract_domain_keywords,
    match_concepts,
    merge_graphs,
    parse_turtle,
    serialize_turtle,
)
from ontosearch.refinement import (
    Expansion,
    ExpansionMap,
    RefinedQuery,
    build_expansion_map,
    generate_refined_queries,
)
from ontosearch.backends import (
    BackendError,
    CorpusBackend,
    CorpusIndex,
    LiveBackend,
    PageMeta,
    SearchResult,
    build_corpus_index,
    extract_page_meta,
    load_corpus_manifest,
)
from ontosearch.ranking import (
    RankedResult,
    RankWeights,
    ScoreBreakdown,
    filter_results,
    fuse_and_rank,
    normalize_url,
    score_result,
)
from ontosearch.evaluation import (
    EvalReport,
    EvalRow,
    JudgmentSet,
    RunFile,
    evaluate_runs,
    load_judgments,
    load_run,
    precision,
    relative_recall,
    summarize,
)
from ontosearch.config import Config, ConfigError, load_config
from ontosearch.engine import SearchEngine, SearchResponse, EmptyQueryError, BackendUnavailableError

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
