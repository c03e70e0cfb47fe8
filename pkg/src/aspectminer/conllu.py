"""CoNLL-U corpus loading and the in-memory dependency-tree model.

Only the ID, FORM, LEMMA, UPOS, HEAD and DEPREL columns are consumed.
Multiword-token ranges (``3-4``) and empty nodes (``5.1``) are skipped so the
resulting sentences carry the basic tree only.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .common import CorpusParseError, CorpusStructureError, EmptyCorpusError

SentenceRef = tuple[str, int]
TokenSpan = tuple[int, int]


@dataclass(frozen=True)
class Token:
    index: int          # 1-based position within the sentence
    surface: str
    lemma: str
    pos: str            # UPOS tag
    head: int           # 0 = root
    deprel: str


@dataclass(frozen=True)
class ParsedSentence:
    tokens: tuple[Token, ...]
    text: str
    doc_id: str

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> Token:
        return self.tokens[index - 1]

    def children(self, index: int) -> list[Token]:
        return [t for t in self.tokens if t.head == index]

    def root(self) -> Token:
        for t in self.tokens:
            if t.head == 0:
                return t
        raise CorpusStructureError("sentence has no root")

    def adjacency(self) -> dict[int, set[int]]:
        """Undirected dependency adjacency over 1-based token indices."""
        adj: dict[int, set[int]] = {t.index: set() for t in self.tokens}
        for t in self.tokens:
            if t.head > 0:
                adj[t.index].add(t.head)
                adj[t.head].add(t.index)
        return adj

    def token_char_offsets(self) -> list[tuple[int, int] | None]:
        """Align each token surface to its character offsets in ``text``.

        Alignment walks left to right; a token whose surface cannot be found
        after the previous match yields None.
        """
        offsets: list[tuple[int, int] | None] = []
        cursor = 0
        lower = self.text.lower()
        for t in self.tokens:
            pos = self.text.find(t.surface, cursor)
            if pos < 0:
                pos = lower.find(t.surface.lower(), cursor)
            if pos < 0:
                offsets.append(None)
                continue
            offsets.append((pos, pos + len(t.surface)))
            cursor = pos + len(t.surface)
        return offsets

    def char_span(self, span: TokenSpan) -> tuple[int, int] | None:
        """Character offsets covering a 1-based token span, or None if unaligned."""
        offsets = self.token_char_offsets()
        start, end = offsets[span[0] - 1], offsets[span[1] - 1]
        if start is None or end is None:
            return None
        return (start[0], end[1])


@dataclass(frozen=True)
class ParsedCorpus:
    sentences: tuple[ParsedSentence, ...]
    source_path: str = ""

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)


def lemma_or_surface(token: Token) -> str:
    """Lowercased lemma when present, else the lowercased surface form."""
    if token.lemma and token.lemma != "_":
        return token.lemma.lower()
    return token.surface.lower()


def span_term(sentence: ParsedSentence, span: TokenSpan) -> str:
    """Normalized term covering a token span (space-joined normalized tokens)."""
    return " ".join(lemma_or_surface(sentence.token(i)) for i in range(span[0], span[1] + 1))


def _is_skippable_id(token_id: str) -> bool:
    return "-" in token_id or "." in token_id


def validate_tree(tokens: list[Token], describe: str) -> None:
    """Raise CorpusStructureError unless the head links form a single-rooted tree."""
    n = len(tokens)
    roots = [t for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise CorpusStructureError(f"{describe}: expected exactly one root, found {len(roots)}")
    for t in tokens:
        if t.head < 0 or t.head > n:
            raise CorpusStructureError(f"{describe}: token {t.index} has out-of-range head {t.head}")
        if t.head == t.index:
            raise CorpusStructureError(f"{describe}: token {t.index} is its own head")
    # every token must reach the root by following heads
    for t in tokens:
        seen = set()
        cur = t.index
        while cur != 0:
            if cur in seen:
                raise CorpusStructureError(f"{describe}: cycle through token {t.index}")
            seen.add(cur)
            cur = tokens[cur - 1].head


def load_conllu(path: str) -> ParsedCorpus:
    """Parse a CoNLL-U file into an immutable corpus of dependency trees.

    Raises CorpusParseError (with line number) on malformed token lines,
    CorpusStructureError when a sentence violates the tree invariant, and
    EmptyCorpusError when the file contains no sentences.
    """
    try:
        with open(path, encoding="utf-8") as f:
            lines = f.read().splitlines()
    except UnicodeDecodeError as exc:
        raise CorpusParseError(f"not valid UTF-8: {exc}", 0) from None

    default_doc = os.path.splitext(os.path.basename(path))[0]
    sentences: list[ParsedSentence] = []
    pending: list[tuple[int, str]] = []  # (line_no, token line)
    comment_text: str | None = None
    doc_id = default_doc

    def flush() -> None:
        nonlocal pending, comment_text
        if not pending:
            comment_text = None
            return
        tokens: list[Token] = []
        for line_no, line in pending:
            cols = line.split("\t")
            if len(cols) != 10:
                raise CorpusParseError(f"expected 10 tab-separated columns, got {len(cols)}", line_no)
            if _is_skippable_id(cols[0]):
                continue
            try:
                index = int(cols[0])
            except ValueError:
                raise CorpusParseError(f"bad token id {cols[0]!r}", line_no) from None
            try:
                head = int(cols[6])
            except ValueError:
                raise CorpusParseError(f"bad head {cols[6]!r}", line_no) from None
            if index != len(tokens) + 1:
                raise CorpusParseError(f"token ids not consecutive at id {index}", line_no)
            if not cols[3] or not cols[7]:
                raise CorpusParseError("empty UPOS or DEPREL column", line_no)
            tokens.append(Token(index=index, surface=cols[1], lemma=cols[2],
                                pos=cols[3], head=head, deprel=cols[7]))
        if tokens:
            describe = f"sentence {len(sentences) + 1} in {path}"
            validate_tree(tokens, describe)
            text = comment_text if comment_text is not None else " ".join(t.surface for t in tokens)
            sentences.append(ParsedSentence(tokens=tuple(tokens), text=text, doc_id=doc_id))
        pending = []
        comment_text = None

    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("text") and "=" in body:
                key, value = body.split("=", 1)
                if key.strip() == "text":
                    comment_text = value.strip()
            elif body.startswith("newdoc"):
                if "=" in body:
                    doc_id = body.split("=", 1)[1].strip()
            continue
        pending.append((line_no, line))
    flush()

    if not sentences:
        raise EmptyCorpusError(f"no sentences found in {path}")
    return ParsedCorpus(sentences=tuple(sentences), source_path=path)


def sentence_to_conllu(sentence: ParsedSentence) -> str:
    """Serialize a sentence back to CoNLL-U (unconsumed columns written as '_')."""
    lines = [f"# text = {sentence.text}"]
    for t in sentence.tokens:
        lines.append("\t".join([
            str(t.index), t.surface, t.lemma, t.pos, "_", "_",
            str(t.head), t.deprel, "_", "_",
        ]))
    return "\n".join(lines) + "\n"


def corpus_to_conllu(corpus: ParsedCorpus) -> str:
    return "\n".join(sentence_to_conllu(s) for s in corpus.sentences)


def write_conllu(corpus: ParsedCorpus, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(corpus_to_conllu(corpus))
