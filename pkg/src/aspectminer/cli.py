"""Batch command-line interface; a thin client over the shared pipeline."""

from __future__ import annotations

import socket
import sys

import click

from . import pipeline
from .classify import find_aspect_occurrences
from .common import AspectMinerError
from .config import PipelineConfig
from .conllu import load_conllu
from .embeddings import load_glove
from .evaluation import (EXACT, LENIENT, EvalResult, eval_extraction, eval_polarity,
                         gold_annotations, load_semeval_xml)
from .lexicons import load_lexicons
from .polarity import load_polarity_seeds
from .rerank import load_training_csv, save_model, train
from . import resources


def _load_config(config_path: str | None, seed: int | None,
                 threshold: float | None) -> PipelineConfig:
    config = PipelineConfig.from_file(config_path) if config_path else PipelineConfig()
    if seed is not None:
        config.seed = seed
    if threshold is not None:
        config.rerank_threshold = threshold
    return config


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Aspect-based sentiment lexicon extraction, curation and classification."""


@main.command()
@click.option("--corpus", required=True, type=click.Path(exists=True, dir_okay=False),
              help="CoNLL-U input dataset")
@click.option("--embeddings", required=True, type=click.Path(exists=True, dir_okay=False),
              help="word vectors in GloVe text format")
@click.option("--out", required=True, type=click.Path(file_okay=False),
              help="directory for aspects.csv / opinions.csv")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=None, help="override the config seed")
@click.option("--threshold", type=float, default=None, help="override the rerank threshold")
def extract(corpus, embeddings, out, config_path, seed, threshold):
    """Generate aspect and opinion lexicons from an unlabeled corpus."""
    try:
        config = _load_config(config_path, seed, threshold)
        result = pipeline.extract_and_save(corpus, embeddings, out, config)
    except AspectMinerError as exc:
        _fail(exc)
        return
    click.echo(f"wrote {len(result.lexicons.aspects)} aspects and "
               f"{len(result.lexicons.opinions)} opinions to {out} "
               f"({result.iterations} bootstrap iterations)")


@main.command()
@click.option("--target", required=True, type=click.Path(exists=True, dir_okay=False),
              help="CoNLL-U target dataset")
@click.option("--lexicons", "lexicons_dir", required=True, type=click.Path(file_okay=False),
              help="directory holding aspects.csv / opinions.csv")
@click.option("--out", required=True, type=click.Path(file_okay=False),
              help="directory for mentions.jsonl / report.json / report.csv")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
def classify(target, lexicons_dir, out, config_path):
    """Detect sentiment mentions and write the per-aspect report."""
    try:
        config = _load_config(config_path, None, None)
        lex = load_lexicons(lexicons_dir)
        result = pipeline.classify_and_save(target, lex, out, config)
    except AspectMinerError as exc:
        _fail(exc)
        return
    positive = sum(r.positive_count for r in result.report)
    negative = sum(r.negative_count for r in result.report)
    click.echo(f"wrote {len(result.mentions)} mentions over {len(result.report)} aspects "
               f"(+{positive}/-{negative}) to {out}")


def _print_result(label: str, result: EvalResult) -> None:
    click.echo(f"{label:<24} P={result.precision:.4f} R={result.recall:.4f} "
               f"F1={result.f1:.4f} (tp={result.tp} fp={result.fp} fn={result.fn})")


@main.command("eval")
@click.option("--corpus", required=True, type=click.Path(exists=True, dir_okay=False),
              help="CoNLL-U test corpus, sentence-aligned with the gold file")
@click.option("--lexicons", "lexicons_dir", required=True, type=click.Path(file_okay=False))
@click.option("--gold", required=True, type=click.Path(exists=True, dir_okay=False),
              help="gold aspect annotations (SemEval ABSA XML)")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
def eval_cmd(corpus, lexicons_dir, gold, config_path):
    """Score aspect extraction and polarity against gold annotations.

    The gold file's sentences must appear in the same order as the corpus
    sentences; alignment is by position.
    """
    try:
        config = _load_config(config_path, None, None)
        lex = load_lexicons(lexicons_dir)
        parsed = load_conllu(corpus)
        gold_sentences = load_semeval_xml(gold)
        if len(gold_sentences) != len(parsed.sentences):
            raise AspectMinerError(
                f"gold has {len(gold_sentences)} sentences but corpus has "
                f"{len(parsed.sentences)}; they must align by position")
        negations = pipeline.load_negation_lexicon(config)

        predicted_spans = {}
        for sentence, gold_sentence in zip(parsed.sentences, gold_sentences):
            spans = []
            for token_span, _term in find_aspect_occurrences(sentence, lex):
                char_span = sentence.char_span(token_span)
                if char_span is not None:
                    spans.append(char_span)
            predicted_spans[gold_sentence.sentence_id] = spans

        from .classify import classify_corpus
        mentions = classify_corpus(parsed, lex, negations)
        polarity_preds: dict[str, list] = {g.sentence_id: [] for g in gold_sentences}
        for m in mentions:
            sid = gold_sentences[m.sentence_ref[1]].sentence_id
            if m.aspect_char_span is not None:
                polarity_preds[sid].append((m.aspect_char_span, m.polarity))

        annotations = gold_annotations(gold_sentences)
        _print_result("extraction (exact)", eval_extraction(predicted_spans, annotations, EXACT))
        _print_result("extraction (lenient)", eval_extraction(predicted_spans, annotations, LENIENT))
        _print_result("polarity (lenient)", eval_polarity(polarity_preds, annotations, LENIENT))
    except AspectMinerError as exc:
        _fail(exc)


@main.command("train-rerank")
@click.option("--training", required=True, type=click.Path(exists=True, dir_okay=False),
              help="CSV of term,label with label 0 or 1")
@click.option("--embeddings", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False),
              help="path for the saved model file")
@click.option("--hidden", type=int, default=100, show_default=True)
@click.option("--epochs", type=int, default=200, show_default=True)
@click.option("--lr", type=float, default=0.01, show_default=True)
@click.option("--batch", type=int, default=32, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def train_rerank(training, embeddings, out, hidden, epochs, lr, batch, seed):
    """Train the opinion-scoring model from a labeled term list."""
    try:
        store = load_glove(embeddings)
        seeds = load_polarity_seeds(resources.default_positive_seeds_path(),
                                    resources.default_negative_seeds_path())
        generic = sorted(set(seeds.positive) | set(seeds.negative))
        dataset, skipped = load_training_csv(training, store, generic)
        if skipped:
            click.echo(f"skipped {len(skipped)} out-of-vocabulary terms", err=True)
        if not dataset:
            raise AspectMinerError("no training term is covered by the embeddings")
        model = train(dataset, hidden_size=hidden, epochs=epochs, learning_rate=lr,
                      batch_size=batch, seed=seed)
        save_model(model, out)
    except (AspectMinerError, ValueError) as exc:
        _fail(exc)
        return
    click.echo(f"trained on {len(dataset)} terms; model written to {out}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True,
              help="0 picks a free ephemeral port")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
def serve(host, port, config_path):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    try:
        config = _load_config(config_path, None, None)
    except AspectMinerError as exc:
        _fail(exc)
        return
    if port == 0:
        with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as probe:
            probe.bind((host, 0))
            port = probe.getsockname()[1]
    click.echo(f"listening on http://{host}:{port}", nl=True)
    sys.stdout.flush()
    uvicorn.run(create_app(config), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
