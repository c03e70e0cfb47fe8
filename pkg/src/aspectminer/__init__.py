"""Weakly-supervised aspect-based sentiment analysis.

The package turns an unlabeled dependency-parsed corpus into editable aspect
and opinion lexicons, then classifies target corpora into per-aspect
positive/negative sentiment reports.
"""

from .bootstrap import CandidateTerm, SeedLexicon, load_seed_lexicon, run_bootstrap
from .classify import NegationLexicon, SentimentMention, classify_corpus, find_mentions
from .common import AspectMinerError, Polarity, TermKind
from .config import PipelineConfig
from .conllu import ParsedCorpus, ParsedSentence, Token, lemma_or_surface, load_conllu
from .embeddings import EmbeddingStore, load_glove
from .evaluation import EvalResult, eval_extraction, eval_polarity, split_train_test
from .lexicons import (AspectEntry, LexiconEdit, Lexicons, OpinionEntry, apply_edit,
                       collect_examples, load_lexicons, save_lexicons)
from .pipeline import classify_target, extract_lexicons
from .polarity import PolaritySeedSets, estimate_polarity, polarize_lexicon
from .rerank import MlpModel, RerankFeatures, featurize, filter_opinions, predict, train
from .reporting import AspectReportRow, build_report
from .rules import ExtractionRule, RuleMatch, default_rule_set, expand_noun_phrase, match_rules

__version__ = "0.1.0"
