"""Regenerate the static test fixtures under tests/fixtures/.

The corpus is a hand-parsed restaurant-review miniature: token tuples are
(surface, lemma, upos, head, deprel) with 1-based heads (0 = root). The toy
embedding file places opinion words in two tight polarity clusters and nouns
in a separate region so similarity features behave predictably.
"""

from __future__ import annotations

import os

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "tests", "fixtures")


def tok(surface, lemma, upos, head, deprel):
    return (surface, lemma, upos, head, deprel)


def copular(noun_surface, noun_lemma, adj, extra=None):
    """'The NOUN was ADJ .' with optional advmod inserted before the adjective."""
    toks = [tok("The", "the", "DET", 2, "det")]
    if extra is None:
        toks += [
            tok(noun_surface, noun_lemma, "NOUN", 4, "nsubj"),
            tok("was", "be", "AUX", 4, "cop"),
            tok(adj, adj, "ADJ", 0, "root"),
            tok(".", ".", "PUNCT", 4, "punct"),
        ]
    else:
        toks += [
            tok(noun_surface, noun_lemma, "NOUN", 5, "nsubj"),
            tok("was", "be", "AUX", 5, "cop"),
            tok(extra, extra, "ADV" if extra != "not" else "PART", 5, "advmod"),
            tok(adj, adj, "ADJ", 0, "root"),
            tok(".", ".", "PUNCT", 5, "punct"),
        ]
    return toks


def amod(adj, noun_surface, noun_lemma):
    """'ADJ NOUN .'"""
    return [
        tok(adj.capitalize(), adj, "ADJ", 2, "amod"),
        tok(noun_surface, noun_lemma, "NOUN", 0, "root"),
        tok(".", ".", "PUNCT", 2, "punct"),
    ]


SENTENCES = [
    amod("nice", "decor", "decor"),
    [tok("The", "the", "DET", 4, "det"), tok("nice", "nice", "ADJ", 4, "amod"),
     tok("cozy", "cozy", "ADJ", 4, "amod"), tok("decor", "decor", "NOUN", 0, "root"),
     tok(".", ".", "PUNCT", 4, "punct")],
    copular("food", "food", "tasty", extra="super"),
    amod("good", "food", "food"),
    [tok("The", "the", "DET", 2, "det"), tok("food", "food", "NOUN", 3, "nsubj"),
     tok("tastes", "taste", "VERB", 0, "root"), tok("great", "great", "ADJ", 3, "xcomp"),
     tok(".", ".", "PUNCT", 3, "punct")],
    copular("food", "food", "tasty", extra="not"),
    amod("tasty", "pasta", "pasta"),
    amod("delicious", "pasta", "pasta"),
    amod("friendly", "staff", "staff"),
    [tok("The", "the", "DET", 2, "det"), tok("staff", "staff", "NOUN", 7, "nsubj"),
     tok("and", "and", "CCONJ", 5, "cc"), tok("the", "the", "DET", 5, "det"),
     tok("waiter", "waiter", "NOUN", 2, "conj"), tok("were", "be", "AUX", 7, "cop"),
     tok("rude", "rude", "ADJ", 0, "root"), tok(".", ".", "PUNCT", 7, "punct")],
    copular("waiter", "waiter", "rude"),
    amod("friendly", "waiter", "waiter"),
    amod("excellent", "service", "service"),
    amod("quick", "service", "service"),
    copular("service", "service", "quick"),
    [tok("The", "the", "DET", 3, "det"), tok("waiting", "waiting", "NOUN", 3, "compound"),
     tok("service", "service", "NOUN", 5, "nsubj"), tok("was", "be", "AUX", 5, "cop"),
     tok("slow", "slow", "ADJ", 0, "root"), tok(".", ".", "PUNCT", 5, "punct")],
    copular("service", "service", "slow"),
    amod("great", "pizza", "pizza"),
    amod("delicious", "pizza", "pizza"),
    copular("pizza", "pizza", "cold"),
    amod("fresh", "drinks", "drink"),
    copular("drinks", "drink", "cold"),
    [tok("The", "the", "DET", 2, "det"), tok("drinks", "drink", "NOUN", 6, "nsubj"),
     tok("and", "and", "CCONJ", 4, "cc"), tok("desserts", "dessert", "NOUN", 2, "conj"),
     tok("were", "be", "AUX", 6, "cop"), tok("great", "great", "ADJ", 0, "root"),
     tok(".", ".", "PUNCT", 6, "punct")],
    [tok("The", "the", "DET", 2, "det"), tok("menu", "menu", "NOUN", 3, "nsubj"),
     tok("lists", "list", "VERB", 0, "root"), tok("many", "many", "DET", 5, "det"),
     tok("desserts", "dessert", "NOUN", 3, "obj"), tok(".", ".", "PUNCT", 3, "punct")],
    amod("great", "menu", "menu"),
    amod("cold", "beverages", "beverage"),
    amod("fresh", "beverages", "beverage"),
    [tok("Excellent", "excellent", "ADJ", 3, "amod"), tok("wine", "wine", "NOUN", 3, "compound"),
     tok("list", "list", "NOUN", 0, "root"), tok(".", ".", "PUNCT", 3, "punct")],
    [tok("Good", "good", "ADJ", 3, "amod"), tok("wine", "wine", "NOUN", 3, "compound"),
     tok("list", "list", "NOUN", 0, "root"), tok(".", ".", "PUNCT", 3, "punct")],
    [tok("The", "the", "DET", 3, "det"), tok("wine", "wine", "NOUN", 3, "compound"),
     tok("list", "list", "NOUN", 5, "nsubj"), tok("was", "be", "AUX", 5, "cop"),
     tok("overpriced", "overpriced", "ADJ", 0, "root"), tok(".", ".", "PUNCT", 5, "punct")],
    copular("pizza", "pizza", "overpriced"),
    amod("lovely", "atmosphere", "atmosphere"),
    [tok("The", "the", "DET", 2, "det"), tok("atmosphere", "atmosphere", "NOUN", 4, "nsubj"),
     tok("was", "be", "AUX", 4, "cop"), tok("cozy", "cozy", "ADJ", 0, "root"),
     tok("and", "and", "CCONJ", 6, "cc"), tok("lovely", "lovely", "ADJ", 4, "conj"),
     tok(".", ".", "PUNCT", 4, "punct")],
    amod("cozy", "atmosphere", "atmosphere"),
    amod("cozy", "place", "place"),
    [tok("The", "the", "DET", 2, "det"), tok("place", "place", "NOUN", 4, "nsubj"),
     tok("was", "be", "AUX", 4, "cop"), tok("nice", "nice", "ADJ", 0, "root"),
     tok("and", "and", "CCONJ", 6, "cc"), tok("cozy", "cozy", "ADJ", 4, "conj"),
     tok(".", ".", "PUNCT", 4, "punct")],
    amod("charming", "place", "place"),
    copular("place", "place", "noisy"),
    copular("atmosphere", "atmosphere", "noisy"),
    copular("menu", "menu", "excellent"),
]


def sentence_text(tokens):
    words = [t[0] for t in tokens]
    out = ""
    for w in words:
        if w in {".", ",", "!", "?"}:
            out += w
        elif out:
            out += " " + w
        else:
            out = w
    return out


def write_conllu(path, sentences):
    blocks = []
    for tokens in sentences:
        lines = [f"# text = {sentence_text(tokens)}"]
        for i, (surface, lemma, upos, head, deprel) in enumerate(tokens, start=1):
            lines.append("\t".join([str(i), surface, lemma, upos, "_", "_",
                                    str(head), deprel, "_", "_"]))
        blocks.append("\n".join(lines))
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n\n".join(blocks) + "\n")


POSITIVE_WORDS = ["good", "great", "nice", "excellent", "amazing", "wonderful",
                  "friendly", "fresh", "delicious", "tasty", "cozy", "lovely", "quick"]
NEGATIVE_WORDS = ["bad", "terrible", "awful", "horrible", "rude", "slow", "cold",
                  "bland", "poor", "disappointing", "overpriced", "noisy"]
NOUN_WORDS = ["food", "menu", "staff", "service", "decor", "place", "city", "table",
              "waiter", "pizza", "pasta", "wine", "restaurant", "atmosphere", "price",
              "dessert", "drink", "coffee", "salad", "soup", "portion", "beverage",
              "list", "bread", "evening"]

DIM = 6


def write_embeddings(path):
    rng = np.random.default_rng(42)
    pos_anchor = np.array([1.0, 0.8, 0.2, 0.0, 0.3, 0.1])
    neg_anchor = np.array([-1.0, -0.7, 0.1, 0.2, -0.4, 0.0])
    noun_anchor = np.array([0.0, 0.1, 1.0, 0.8, -0.2, 0.5])
    rows = []
    for word in POSITIVE_WORDS:
        rows.append((word, pos_anchor + rng.normal(0, 0.08, DIM)))
    for word in NEGATIVE_WORDS:
        rows.append((word, neg_anchor + rng.normal(0, 0.08, DIM)))
    for word in NOUN_WORDS:
        rows.append((word, noun_anchor + rng.normal(0, 0.35, DIM)))
    assert len(rows) == 50, len(rows)
    with open(path, "w", encoding="utf-8") as f:
        for word, vec in rows:
            f.write(word + " " + " ".join(f"{v:.4f}" for v in vec) + "\n")


GOLD_MICRO = """<?xml version="1.0" encoding="UTF-8"?>
<sentences>
  <sentence id="s1">
    <text>The food was great.</text>
    <aspectTerms>
      <aspectTerm term="food" polarity="positive" from="4" to="8"/>
    </aspectTerms>
  </sentence>
  <sentence id="s2">
    <text>The waiting service was slow.</text>
    <aspectTerms>
      <aspectTerm term="waiting service" polarity="negative" from="4" to="19"/>
    </aspectTerms>
  </sentence>
  <sentence id="s3">
    <text>Nice decor.</text>
    <aspectTerms>
      <aspectTerm term="decor" polarity="positive" from="5" to="10"/>
    </aspectTerms>
  </sentence>
  <sentence id="s4">
    <text>The staff was rude.</text>
    <aspectTerms>
      <aspectTerm term="staff" polarity="negative" from="4" to="9"/>
    </aspectTerms>
  </sentence>
  <sentence id="s5">
    <text>Great pizza.</text>
    <aspectTerms>
      <aspectTerm term="pizza" polarity="positive" from="6" to="11"/>
    </aspectTerms>
  </sentence>
  <sentence id="s6">
    <text>The menu was huge.</text>
    <aspectTerms>
      <aspectTerm term="menu" polarity="neutral" from="4" to="8"/>
    </aspectTerms>
  </sentence>
  <sentence id="s7">
    <text>The drinks were cold.</text>
    <aspectTerms>
      <aspectTerm term="drinks" polarity="conflict" from="4" to="10"/>
    </aspectTerms>
  </sentence>
  <sentence id="s8">
    <text>Tasty pasta and soup.</text>
    <aspectTerms>
      <aspectTerm term="pasta" polarity="positive" from="6" to="11"/>
      <aspectTerm term="soup" polarity="positive" from="16" to="20"/>
    </aspectTerms>
  </sentence>
  <sentence id="s9">
    <text>The atmosphere was cozy.</text>
    <aspectTerms>
      <aspectTerm term="atmosphere" polarity="positive" from="4" to="14"/>
    </aspectTerms>
  </sentence>
  <sentence id="s10">
    <text>Bad service.</text>
    <aspectTerms>
      <aspectTerm term="service" polarity="negative" from="4" to="11"/>
    </aspectTerms>
  </sentence>
</sentences>
"""

EVAL_SENTENCES = [
    [tok("The", "the", "DET", 2, "det"), tok("food", "food", "NOUN", 4, "nsubj"),
     tok("was", "be", "AUX", 4, "cop"), tok("great", "great", "ADJ", 0, "root"),
     tok(".", ".", "PUNCT", 4, "punct")],
    amod("nice", "decor", "decor"),
    [tok("The", "the", "DET", 2, "det"), tok("staff", "staff", "NOUN", 4, "nsubj"),
     tok("was", "be", "AUX", 4, "cop"), tok("rude", "rude", "ADJ", 0, "root"),
     tok(".", ".", "PUNCT", 4, "punct")],
]

EVAL_GOLD = """<?xml version="1.0" encoding="UTF-8"?>
<sentences>
  <sentence id="e1">
    <text>The food was great.</text>
    <aspectTerms>
      <aspectTerm term="food" polarity="positive" from="4" to="8"/>
    </aspectTerms>
  </sentence>
  <sentence id="e2">
    <text>Nice decor.</text>
    <aspectTerms>
      <aspectTerm term="decor" polarity="positive" from="5" to="10"/>
    </aspectTerms>
  </sentence>
  <sentence id="e3">
    <text>The staff was rude.</text>
    <aspectTerms>
      <aspectTerm term="staff" polarity="negative" from="4" to="9"/>
    </aspectTerms>
  </sentence>
</sentences>
"""


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    write_conllu(os.path.join(FIXTURES, "corpus.conllu"), SENTENCES)
    write_conllu(os.path.join(FIXTURES, "eval_corpus.conllu"), EVAL_SENTENCES)
    write_embeddings(os.path.join(FIXTURES, "toy_embeddings.vec"))
    with open(os.path.join(FIXTURES, "gold_micro.xml"), "w", encoding="utf-8") as f:
        f.write(GOLD_MICRO)
    with open(os.path.join(FIXTURES, "eval_gold.xml"), "w", encoding="utf-8") as f:
        f.write(EVAL_GOLD)
    print(f"wrote fixtures to {os.path.normpath(FIXTURES)} "
          f"({len(SENTENCES)} corpus sentences)")


if __name__ == "__main__":
    main()
