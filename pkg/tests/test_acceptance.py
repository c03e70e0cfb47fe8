"""Acceptance suite: one test per release criterion, each printing a
pass/fail line with its runtime. Run with ``pytest tests/test_acceptance.py -v``
(add ``-s`` to see the lines while running).
"""

import copy
import json
import os
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from aspectminer import pipeline
from aspectminer.bootstrap import SeedLexicon, run_bootstrap
from aspectminer.classify import NegationLexicon, classify_corpus, find_mentions
from aspectminer.common import Polarity, TermKind
from aspectminer.config import PipelineConfig
from aspectminer.conllu import ParsedCorpus, corpus_to_conllu, load_conllu
from aspectminer.embeddings import EmbeddingStore
from aspectminer.evaluation import (EXACT, LENIENT, eval_extraction, eval_polarity,
                                    gold_annotations, load_semeval_xml, split_train_test)
from aspectminer.lexicons import (AspectEntry, LexiconEdit, Lexicons, OpinionEntry,
                                  apply_edit, load_lexicons, save_lexicons)
from aspectminer.polarity import PolaritySeedSets, estimate_polarity
from aspectminer.rerank import (MlpModel, RerankFeatures, loss_and_gradients, predict,
                                train)
from aspectminer.rules import default_rule_set, match_rules

from helpers import (all_pairs_distances, brute_force_matches, brute_force_mentions,
                     build_corpus, build_sentence, food_tasty_rows, nice_decor_rows,
                     random_sentence)
from test_lexicons import random_lexicons


@contextmanager
def criterion(name, budget_seconds=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - start
    if budget_seconds is not None:
        assert elapsed < budget_seconds, f"{name}: {elapsed:.2f}s over {budget_seconds}s budget"
    print(f"[PASS] {name} ({elapsed:.2f}s)")


def test_rule_engine_oracle_equivalence(tmp_path):
    with criterion("rule-engine oracle equivalence on 50 sentences", budget_seconds=1.0):
        rules = default_rule_set()
        rng = np.random.default_rng(1000)
        sentences = [random_sentence(rng, max_tokens=10) for _ in range(50)]
        # round-trip through CoNLL-U so the inputs are genuine parsed files
        path = tmp_path / "oracle.conllu"
        path.write_text(corpus_to_conllu(build_corpus(sentences)), encoding="utf-8")
        corpus = load_conllu(str(path))
        assert len(corpus) == 50
        vocab = ["food", "decor", "nice", "tasty", "great", "staff", "menu", "cold"]
        for sentence in corpus.sentences:
            ko = {str(w) for w in rng.choice(vocab, size=2)}
            ka = {str(w) for w in rng.choice(vocab, size=2)}
            assert match_rules(sentence, rules, ko, ka) == \
                brute_force_matches(sentence, rules, ko, ka)


def test_bootstrap_fixpoint(fixture_corpus):
    with criterion("bootstrap fixpoint on the 40-sentence fixture", budget_seconds=2.0):
        rules = default_rule_set()
        seeds = SeedLexicon({w: Polarity.POSITIVE for w in
                             ("nice", "great", "friendly", "excellent", "fresh",
                              "lovely", "quick", "delicious", "good", "charming")}
                            | {w: Polarity.NEGATIVE for w in ("rude", "slow", "cheap")})
        base = run_bootstrap(fixture_corpus, seeds, rules, max_iterations=10,
                             min_frequency=1)
        assert base.iterations <= 10
        extra = run_bootstrap(fixture_corpus, seeds, rules, max_iterations=base.iterations + 1,
                              min_frequency=1)
        key = lambda r: ({(c.term, c.frequency) for c in r.aspect_candidates},
                         {(c.term, c.frequency) for c in r.opinion_candidates})
        assert key(base) == key(extra)

        rng = np.random.default_rng(8)
        order = rng.permutation(len(fixture_corpus.sentences))
        shuffled = ParsedCorpus(
            sentences=tuple(fixture_corpus.sentences[i] for i in order),
            source_path="permuted")
        permuted = run_bootstrap(shuffled, seeds, rules, max_iterations=10,
                                 min_frequency=1)
        assert key(base) == key(permuted)


def test_table1_reproduction():
    with criterion("documented rule examples reproduce exactly"):
        rules = default_rule_set()
        nice_decor = build_sentence(nice_decor_rows())
        matches = match_rules(nice_decor, rules, known_opinions={"nice"}, known_aspects=set())
        assert [(m.extracted_term, m.extracted_kind) for m in matches] == \
            [("decor", TermKind.ASPECT)]

        food_tasty = build_sentence(food_tasty_rows())
        matches = match_rules(food_tasty, rules, known_opinions=set(), known_aspects={"food"})
        assert [(m.extracted_term, m.extracted_kind) for m in matches] == \
            [("tasty", TermKind.OPINION)]


def test_mlp_gradient_check_and_separable_training():
    with criterion("MLP gradient check + separable training", budget_seconds=5.0):
        rng = np.random.default_rng(90)
        model = MlpModel(w1=rng.normal(scale=0.5, size=(5, 8)),
                         b1=rng.normal(scale=0.1, size=5),
                         w2=rng.normal(scale=0.5, size=5),
                         b2=float(rng.normal(scale=0.1)))
        x = rng.normal(size=(3, 8))
        y = np.array([1.0, 0.0, 1.0])
        _, grads = loss_and_gradients(model, x, y)
        h = 1e-5

        def numeric(get, set_):
            orig = get()
            set_(orig + h)
            up = loss_and_gradients(model, x, y)[0]
            set_(orig - h)
            down = loss_and_gradients(model, x, y)[0]
            set_(orig)
            return (up - down) / (2 * h)

        checked = 0
        for name in ("w1", "b1", "w2"):
            array = getattr(model, name)
            flat = array.ravel()
            for i in range(flat.size):
                num = numeric(lambda: flat[i],
                              lambda v, i=i: flat.__setitem__(i, v))
                ana = grads[name].ravel()[i]
                rel = abs(num - ana) / max(1e-8, abs(num) + abs(ana))
                assert rel < 1e-4, (name, i, rel)
                checked += 1
        num = numeric(lambda: model.b2,
                      lambda v: setattr(model, "b2", v))
        rel = abs(num - float(grads["b2"])) / max(1e-8, abs(num) + abs(float(grads["b2"])))
        assert rel < 1e-4
        assert checked == 5 * 8 + 5 + 5

        data = []
        for i in range(20):
            label = i % 2
            base = 1.5 if label else -1.5
            emb = rng.normal(loc=base, scale=0.2, size=4)
            data.append((RerankFeatures(embedding=emb, sim_mean=base / 2, sim_std=0.1,
                                        sim_max=base / 2 + 0.2, sim_min=base / 2 - 0.2),
                         label))
        trained = train(data, hidden_size=8, epochs=500, learning_rate=0.05,
                        batch_size=4, seed=1)
        accuracy = sum(1 for f, label in data
                       if (predict(trained, f) > 0.5) == bool(label)) / len(data)
        assert accuracy == 1.0


def test_polarity_antisymmetry():
    with criterion("polarity antisymmetry under seed-set swap (100 terms)"):
        rng = np.random.default_rng(555)
        vectors = {f"term{i}": rng.normal(size=5) for i in range(100)}
        for name in ("p1", "p2", "p3", "n1", "n2", "n3"):
            vectors[name] = rng.normal(size=5)
        store = EmbeddingStore(vectors, 5)
        seeds = PolaritySeedSets(positive=("p1", "p2", "p3"), negative=("n1", "n2", "n3"))
        swapped = seeds.swapped()
        for i in range(100):
            term = f"term{i}"
            polarity, score = estimate_polarity(term, store, seeds)
            polarity_swapped, score_swapped = estimate_polarity(term, store, swapped)
            assert score_swapped == -score
            if score != 0.0:
                assert polarity_swapped is not polarity


def test_classifier_path_soundness_and_oracle(fixture_corpus):
    with criterion("classifier path soundness + pairing oracle", budget_seconds=1.0):
        negations = NegationLexicon(frozenset({"not", "n't", "no", "never"}))
        lex = Lexicons(
            aspects=[AspectEntry(term=t) for t in
                     ("food", "decor", "staff", "menu", "service", "pizza", "pasta",
                      "place", "atmosphere", "waiter", "drink", "dessert", "beverage",
                      "wine list")],
            opinions=[OpinionEntry(term=t, polarity=p, score=0.9) for t, p in
                      (("nice", Polarity.POSITIVE), ("tasty", Polarity.POSITIVE),
                       ("cold", Polarity.NEGATIVE), ("great", Polarity.POSITIVE),
                       ("rude", Polarity.NEGATIVE), ("slow", Polarity.NEGATIVE),
                       ("friendly", Polarity.POSITIVE), ("cozy", Polarity.POSITIVE),
                       ("overpriced", Polarity.NEGATIVE), ("noisy", Polarity.NEGATIVE))])
        mentions = classify_corpus(fixture_corpus, lex, negations)
        assert mentions
        for m in mentions:
            sentence = fixture_corpus.sentences[m.sentence_ref[1]]
            dist = all_pairs_distances(sentence)
            indices = set(range(m.aspect_span[0], m.aspect_span[1] + 1))
            anchors = [i for i in indices
                       if sentence.token(i).head == 0 or sentence.token(i).head not in indices]
            assert any(1 <= dist[m.opinion_span][a] <= 2 for a in anchors)
        for index, sentence in enumerate(fixture_corpus.sentences):
            got = [(m.aspect_span, m.aspect_term, m.opinion_span, m.polarity, m.negated)
                   for m in find_mentions(sentence, lex, negations,
                                          sentence_ref=(sentence.doc_id, index))]
            assert got == brute_force_mentions(sentence, lex, negations)


def test_negation_reversal():
    with criterion("negation reverses mention polarity"):
        negations = NegationLexicon(frozenset({"not"}))
        lex = Lexicons(aspects=[AspectEntry(term="food")],
                       opinions=[OpinionEntry(term="tasty", polarity=Polarity.POSITIVE,
                                              score=0.9)])
        plain = [("The", "the", "DET", 2, "det"),
                 ("food", "food", "NOUN", 4, "nsubj"),
                 ("was", "be", "AUX", 4, "cop"),
                 ("tasty", "tasty", "ADJ", 0, "root")]
        [m] = find_mentions(build_sentence(plain), lex, negations)
        assert m.polarity is Polarity.POSITIVE and m.negated is False
        negated = [("The", "the", "DET", 2, "det"),
                   ("food", "food", "NOUN", 5, "nsubj"),
                   ("was", "be", "AUX", 5, "cop"),
                   ("not", "not", "PART", 5, "advmod"),
                   ("tasty", "tasty", "ADJ", 0, "root")]
        [m] = find_mentions(build_sentence(negated), lex, negations)
        assert m.polarity is Polarity.NEGATIVE and m.negated is True


def test_eval_harness_arithmetic(fixtures_dir):
    with criterion("evaluation arithmetic on the micro gold set"):
        sentences = load_semeval_xml(os.path.join(fixtures_dir, "gold_micro.xml"))
        annotations = gold_annotations(sentences)
        predictions = {
            "s1": [(4, 8)], "s2": [(12, 19)], "s3": [(5, 10)], "s4": [],
            "s5": [(0, 5)], "s6": [(4, 8)], "s7": [(4, 10)],
            "s8": [(6, 11), (16, 20)], "s9": [(4, 10)], "s10": [(4, 11), (0, 3)],
        }
        exact = eval_extraction(predictions, annotations, EXACT)
        lenient = eval_extraction(predictions, annotations, LENIENT)
        assert (exact.tp, exact.fp, exact.fn) == (7, 4, 4)
        assert (lenient.tp, lenient.fp, lenient.fn) == (9, 2, 2)
        assert abs(exact.f1 - 7 / 11) < 1e-12
        assert abs(lenient.f1 - 9 / 11) < 1e-12
        # the "service" vs "waiting service" sentence flips from miss to hit
        only_s2 = [a for a in annotations if a.sentence_id == "s2"]
        assert eval_extraction({"s2": [(12, 19)]}, only_s2, EXACT).tp == 0
        assert eval_extraction({"s2": [(12, 19)]}, only_s2, LENIENT).tp == 1

        polarity_predictions = {
            "s1": [((4, 8), Polarity.POSITIVE)],
            "s2": [((12, 19), Polarity.NEGATIVE)],
            "s3": [((5, 10), Polarity.NEGATIVE)],
            "s4": [], "s5": [((0, 5), Polarity.POSITIVE)], "s6": [], "s7": [],
            "s8": [((6, 11), Polarity.POSITIVE)],
            "s9": [((4, 10), Polarity.POSITIVE)],
            "s10": [((4, 11), Polarity.NEGATIVE)],
        }
        polarity = eval_polarity(polarity_predictions, annotations)
        assert (polarity.tp, polarity.fp, polarity.fn) == (5, 2, 4)
        assert abs(polarity.f1 - 0.625) < 1e-12

        rng = random.Random(77)
        for _ in range(200):
            annotations = []
            span_predictions = {}
            for i in range(3):
                spans = []
                for _ in range(rng.randrange(0, 4)):
                    start = rng.randrange(0, 40)
                    spans.append((start, start + rng.randrange(1, 10), "positive"))
                from aspectminer.evaluation import GoldAnnotation, GoldSpan
                annotations.append(GoldAnnotation(
                    sentence_id=f"s{i}",
                    aspect_spans=tuple(GoldSpan(*s) for s in spans)))
                preds = []
                for _ in range(rng.randrange(0, 4)):
                    start = rng.randrange(0, 40)
                    preds.append((start, start + rng.randrange(1, 10)))
                span_predictions[f"s{i}"] = preds
            exact = eval_extraction(span_predictions, annotations, EXACT)
            lenient = eval_extraction(span_predictions, annotations, LENIENT)
            assert lenient.tp >= exact.tp
            for result in (exact, lenient):
                recomputed = (2 * result.precision * result.recall /
                              (result.precision + result.recall)
                              if result.precision + result.recall > 0 else 0.0)
                assert abs(result.f1 - recomputed) < 1e-12


def test_lexicon_round_trip_and_edit_atomicity(tmp_path):
    with criterion("lexicon round-trip (100 cases) + edit atomicity"):
        rng = random.Random(31415)
        for case in range(100):
            lex = random_lexicons(rng)
            out = tmp_path / f"case{case}"
            save_lexicons(lex, str(out))
            assert load_lexicons(str(out)).structural_content() == lex.structural_content()

        lex = Lexicons(
            aspects=[AspectEntry(term="drinks", aliases=["beverages"], frequency=4),
                     AspectEntry(term="food", frequency=9)],
            opinions=[OpinionEntry(term="tasty", polarity=Polarity.POSITIVE, score=0.8)])
        snapshot = copy.deepcopy(lex)
        invalid_edits = [
            LexiconEdit(action="nonsense", term="food"),
            LexiconEdit(action="set_enabled", term="ghost", enabled=False),
            LexiconEdit(action="add_aspect", term="beverages"),
            LexiconEdit(action="set_alias", term="food", slot=1, alias="drinks"),
            LexiconEdit(action="set_alias", term="food", slot=4, alias="x"),
            LexiconEdit(action="add_opinion", term="tasty",
                        polarity=Polarity.POSITIVE, score=0.5),
            LexiconEdit(action="set_polarity", term="missing",
                        polarity=Polarity.NEGATIVE),
            LexiconEdit(action="set_score", term="missing", score=0.5),
            LexiconEdit(action="delete_aspect", term="missing"),
        ]
        from aspectminer.common import LexiconEditError
        for edit in invalid_edits:
            with pytest.raises(LexiconEditError):
                apply_edit(lex, edit)
            assert lex.revision == snapshot.revision
            assert lex.structural_content() == snapshot.structural_content()
        valid = apply_edit(lex, LexiconEdit(action="set_enabled", term="food",
                                            enabled=False))
        assert valid.revision == lex.revision + 1


def test_end_to_end_golden_run(tmp_path, corpus_path, embeddings_path):
    with criterion("end-to-end golden run is byte-identical", budget_seconds=10.0):
        outputs = []
        for run in ("a", "b"):
            lexdir = tmp_path / run / "lex"
            repdir = tmp_path / run / "rep"
            extract = subprocess.run(
                [sys.executable, "-m", "aspectminer.cli", "extract",
                 "--corpus", corpus_path, "--embeddings", embeddings_path,
                 "--out", str(lexdir), "--seed", "0"],
                capture_output=True, text=True)
            assert extract.returncode == 0, extract.stderr
            classify = subprocess.run(
                [sys.executable, "-m", "aspectminer.cli", "classify",
                 "--target", corpus_path, "--lexicons", str(lexdir),
                 "--out", str(repdir)],
                capture_output=True, text=True)
            assert classify.returncode == 0, classify.stderr
            blobs = {}
            for rel in (lexdir / "aspects.csv", lexdir / "opinions.csv",
                        repdir / "mentions.jsonl", repdir / "report.json",
                        repdir / "report.csv"):
                blobs[rel.name] = rel.read_bytes()
            outputs.append(blobs)
        assert outputs[0] == outputs[1]
        report = json.loads(outputs[0]["report.json"])
        assert report["rows"], "report must not be empty"


BENCH_DIR = os.environ.get("ASPECTMINER_BENCH_DIR")


@pytest.mark.skipif(not BENCH_DIR, reason="benchmark data not supplied "
                    "(set ASPECTMINER_BENCH_DIR; see README)")
def test_benchmark_mode_expected_range():
    """Best-effort benchmark: restaurant-domain exact-match extraction F1.

    Expects ASPECTMINER_BENCH_DIR to hold restaurants.conllu, restaurants.xml
    (sentence-aligned), seed_lexicon.csv and embeddings.vec. The unsupervised
    pipeline is expected to land within +/-10 points of an F1 of 43.5.
    """
    corpus_path = os.path.join(BENCH_DIR, "restaurants.conllu")
    gold_path = os.path.join(BENCH_DIR, "restaurants.xml")
    seeds_path = os.path.join(BENCH_DIR, "seed_lexicon.csv")
    vectors_path = os.path.join(BENCH_DIR, "embeddings.vec")
    for path in (corpus_path, gold_path, seeds_path, vectors_path):
        assert os.path.exists(path), f"missing benchmark input {path}"

    config = PipelineConfig(seed_lexicon_path=seeds_path)
    corpus = load_conllu(corpus_path)
    gold_sentences = load_semeval_xml(gold_path)
    assert len(gold_sentences) == len(corpus.sentences)
    train_corpus, test_corpus = split_train_test(corpus, 0.75, seed=config.seed)
    test_ids = {id(s) for s in test_corpus.sentences}

    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        train_path = os.path.join(tmp, "train.conllu")
        with open(train_path, "w", encoding="utf-8") as f:
            f.write(corpus_to_conllu(train_corpus))
        result = pipeline.extract_lexicons(train_path, vectors_path, config)

    from aspectminer.classify import find_aspect_occurrences

    predicted = {}
    gold_subset = []
    for sentence, gold_sentence in zip(corpus.sentences, gold_sentences):
        if id(sentence) not in test_ids:
            continue
        spans = []
        for token_span, _ in find_aspect_occurrences(sentence, result.lexicons):
            char_span = sentence.char_span(token_span)
            if char_span:
                spans.append(char_span)
        predicted[gold_sentence.sentence_id] = spans
        gold_subset.append(gold_sentence)
    outcome = eval_extraction(predicted, gold_annotations(gold_subset), EXACT)
    f1_points = 100 * outcome.f1
    print(f"[INFO] benchmark exact-match extraction F1 = {f1_points:.1f}")
    assert 33.5 <= f1_points <= 53.5, \
        f"unsupervised F1 {f1_points:.1f} outside the documented 43.5 +/- 10 range"
