"""End-to-end drivers shared by the CLI and the HTTP service.

``extract_lexicons`` runs corpus loading, the rule bootstrap, opinion
reranking and polarity assignment, returning curated-ready lexicons.
``classify_target`` applies saved lexicons to a target corpus and aggregates
the per-aspect report. Both are deterministic for a fixed config seed.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from . import resources
from .bootstrap import (SeedLexicon, load_seed_lexicon, load_wordlist, run_bootstrap)
from .classify import NegationLexicon, SentimentMention, classify_corpus, load_negations, \
    write_mentions_jsonl
from .common import AspectMinerError
from .config import PipelineConfig
from .conllu import ParsedCorpus, load_conllu
from .embeddings import EmbeddingStore, load_glove
from .lexicons import AspectEntry, Lexicons, OpinionEntry, save_lexicons
from .polarity import PolaritySeedSets, load_polarity_seeds, polarize_lexicon
from .rerank import MlpModel, filter_opinions, load_model, load_training_csv, train
from .reporting import AspectReportRow, build_report, write_report_csv, write_report_json
from .rules import default_rule_set, load_rule_file

logger = logging.getLogger(__name__)


@dataclass
class ExtractResult:
    lexicons: Lexicons
    corpus: ParsedCorpus
    aspect_candidate_count: int
    opinion_candidate_count: int
    iterations: int


@dataclass
class ClassifyResult:
    mentions: list[SentimentMention]
    report: list[AspectReportRow]
    corpus: ParsedCorpus


def _load_generic_opinions(config: PipelineConfig) -> tuple[PolaritySeedSets, list[str]]:
    seeds = load_polarity_seeds(
        config.positive_seeds_path or resources.default_positive_seeds_path(),
        config.negative_seeds_path or resources.default_negative_seeds_path())
    generic = sorted(set(seeds.positive) | set(seeds.negative))
    return seeds, generic


def _rerank_model(config: PipelineConfig, store: EmbeddingStore,
                  generic_opinions: list[str]) -> MlpModel:
    if config.rerank_model_path:
        return load_model(config.rerank_model_path)
    training_path = config.rerank_training_path or resources.default_rerank_training_path()
    dataset, skipped = load_training_csv(training_path, store, generic_opinions)
    if skipped:
        logger.warning("rerank training: %d out-of-vocabulary terms skipped", len(skipped))
    if not dataset:
        raise AspectMinerError(
            f"no rerank training term from {training_path} is covered by the embeddings")
    return train(dataset, hidden_size=config.rerank_hidden_size,
                 epochs=config.rerank_epochs, learning_rate=config.rerank_learning_rate,
                 batch_size=config.rerank_batch_size, seed=config.seed)


def extract_lexicons(corpus_path: str, embeddings_path: str,
                     config: PipelineConfig | None = None) -> ExtractResult:
    config = config or PipelineConfig()
    corpus = load_conllu(corpus_path)
    seeds: SeedLexicon = load_seed_lexicon(
        config.seed_lexicon_path or resources.default_seed_lexicon_path())
    rules = load_rule_file(config.rules_path) if config.rules_path else default_rule_set()
    stopwords = load_wordlist(config.stopwords_path or resources.default_stopwords_path())

    result = run_bootstrap(corpus, seeds, rules,
                           max_iterations=config.max_iterations,
                           min_frequency=config.min_frequency,
                           example_cap=config.example_cap,
                           stopwords=stopwords)

    store = load_glove(embeddings_path, expected_dim=config.expected_dim)
    polarity_seeds, generic_opinions = _load_generic_opinions(config)
    model = _rerank_model(config, store, generic_opinions)
    scored = filter_opinions(result.opinion_candidates, model, store, generic_opinions,
                             threshold=config.rerank_threshold)
    polarized = polarize_lexicon(scored, seeds, store, polarity_seeds)

    aspect_examples_cap = 5
    aspects = []
    for cand in result.aspect_candidates:
        examples = []
        for ref, span in cand.examples[:aspect_examples_cap]:
            sentence = corpus.sentences[ref[1]]
            char_span = sentence.char_span(span)
            if char_span is not None:
                examples.append((sentence.text, char_span))
        aspects.append(AspectEntry(term=cand.term, frequency=cand.frequency,
                                   examples=examples))

    opinions = [OpinionEntry(term=p.term, polarity=p.polarity,
                             score=round(p.rerank_score, 6))
                for p in polarized]
    # deterministic order aligned with the CSV layout
    opinions.sort(key=lambda o: (-o.score, o.term))
    aspects.sort(key=lambda a: (-a.frequency, a.term))

    lexicons = Lexicons(aspects=aspects, opinions=opinions, revision=0,
                        domain_label=config.domain_label)
    return ExtractResult(lexicons=lexicons, corpus=corpus,
                         aspect_candidate_count=len(result.aspect_candidates),
                         opinion_candidate_count=len(result.opinion_candidates),
                         iterations=result.iterations)


def extract_and_save(corpus_path: str, embeddings_path: str, out_dir: str,
                     config: PipelineConfig | None = None) -> ExtractResult:
    result = extract_lexicons(corpus_path, embeddings_path, config)
    save_lexicons(result.lexicons, out_dir)
    return result


def load_negation_lexicon(config: PipelineConfig | None = None) -> NegationLexicon:
    config = config or PipelineConfig()
    return load_negations(config.negations_path or resources.default_negations_path())


def classify_target(target_path: str, lexicons: Lexicons,
                    config: PipelineConfig | None = None) -> ClassifyResult:
    corpus = load_conllu(target_path)
    negations = load_negation_lexicon(config)
    mentions = classify_corpus(corpus, lexicons, negations)
    report = build_report(mentions, lexicons)
    return ClassifyResult(mentions=mentions, report=report, corpus=corpus)


def classify_and_save(target_path: str, lexicons: Lexicons, out_dir: str,
                      config: PipelineConfig | None = None) -> ClassifyResult:
    result = classify_target(target_path, lexicons, config)
    os.makedirs(out_dir, exist_ok=True)
    write_mentions_jsonl(result.mentions, os.path.join(out_dir, "mentions.jsonl"))
    write_report_json(result.report, os.path.join(out_dir, "report.json"))
    write_report_csv(result.report, os.path.join(out_dir, "report.csv"))
    return result
