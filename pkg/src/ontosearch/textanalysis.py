"""Query text analysis: tokens, POS tags, noun-phrase chunks, stop words, location cues.

The tagger is deliberately small: a preference-ordered tag lexicon plus a
handful of suffix rules. It is not a statistical parser; it exists to make
queries like "list the teaching staff in anna university" come out tagged and
chunked the same way every time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Mapping, Sequence

POS_TAGS = frozenset({
    "NN", "NNS", "NNP", "VB", "VBG", "VBD", "VBZ",
    "DT", "IN", "JJ", "CC", "WRB", "WP", "TO", "CD", "OTHER",
})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP"})

DEFAULT_LOCATION_TRIGGERS = frozenset({
    "near", "nearby", "located", "location", "distance", "map", "maps", "route",
})
DEFAULT_LOCATION_TRIGGER_PHRASES = (("how", "far"),)

# Abbreviations like "M.B.A" / "U.S": single letters joined by periods,
# optional trailing period (stripped). Matched before plain words.
_TOKEN_RE = re.compile(r"[A-Za-z](?:\.[A-Za-z])+\.?|[A-Za-z]+|[0-9]+")


@dataclass(frozen=True)
class Token:
    """One query word: original surface form, lowercase lemma, position, POS tag."""

    text: str
    lemma: str
    index: int
    tag: str | None = None


@dataclass(frozen=True)
class NounPhrase:
    """Contiguous (DT)? (JJ)* (NN|NNS|NNP)+ span; the head is the last token."""

    tokens: tuple[Token, ...]

    @property
    def head(self) -> Token:
        return self.tokens[-1]

    @property
    def text(self) -> str:
        return " ".join(t.lemma for t in self.tokens)

    @property
    def content_text(self) -> str:
        """Phrase text without leading determiners ("the teaching staff" -> "teaching staff")."""
        toks = list(self.tokens)
        while toks and toks[0].tag == "DT":
            toks.pop(0)
        return " ".join(t.lemma for t in toks)

    def lemmas(self, *, drop_determiners: bool = False) -> tuple[str, ...]:
        toks = self.tokens
        if drop_determiners:
            toks = tuple(t for t in toks if t.tag != "DT")
        return tuple(t.lemma for t in toks)


@dataclass(frozen=True)
class AnalyzedQuery:
    raw: str
    tokens: tuple[Token, ...]
    noun_phrases: tuple[NounPhrase, ...]
    content_terms: tuple[str, ...]
    anchor_terms: tuple[str, ...]
    is_location_query: bool
    location_terms: tuple[str, ...]


class TagLexicon:
    """word -> preference-ordered POS tags, loaded from a tab-separated file."""

    def __init__(self, entries: Mapping[str, Sequence[str]]):
        self._entries = {w.lower(): tuple(tags) for w, tags in entries.items()}

    @classmethod
    def load(cls, path: str | Path) -> "TagLexicon":
        entries: dict[str, tuple[str, ...]] = {}
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, sep, tags = line.partition("\t")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected 'word<TAB>TAG1,TAG2,...'")
            parsed = tuple(t.strip() for t in tags.split(",") if t.strip())
            bad = [t for t in parsed if t not in POS_TAGS]
            if not parsed or bad:
                raise ValueError(f"{path}:{lineno}: unknown tags {bad or tags!r}")
            entries[word.strip().lower()] = parsed
        return cls(entries)

    def tags_for(self, lemma: str) -> tuple[str, ...]:
        return self._entries.get(lemma.lower(), ())

    def __len__(self) -> int:
        return len(self._entries)


def load_stoplist(path: str | Path) -> frozenset[str]:
    """One lowercase term per line; '#' starts a comment."""
    terms = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            terms.add(line)
    return frozenset(terms)


def tokenize(raw: str) -> list[Token]:
    """Split on whitespace/punctuation, keeping abbreviations like "M.B.A" whole.

    Punctuation is dropped; lemmas are the lowercased surface forms; a trailing
    period on an abbreviation is stripped ("M.B.A." -> "m.b.a").
    """
    tokens = []
    for match in _TOKEN_RE.finditer(raw):
        text = match.group().rstrip(".")
        if not text:
            continue
        tokens.append(Token(text=text, lemma=text.lower(), index=len(tokens)))
    return tokens


def _suffix_tag(lemma: str) -> str:
    if lemma.isdigit():
        return "CD"
    if lemma.endswith("ing") and len(lemma) > 4:
        return "VBG"
    if lemma.endswith("s") and not lemma.endswith("ss") and len(lemma) > 1:
        return "NNS"
    return "NN"


def pos_tag(tokens: Sequence[Token], lexicon: TagLexicon) -> list[Token]:
    """Assign one tag per token: lexicon preference first, then suffix rules.

    Total and deterministic; unknown words default to NN.
    """
    tagged = []
    for tok in tokens:
        tags = lexicon.tags_for(tok.lemma)
        tag = tags[0] if tags else _suffix_tag(tok.lemma)
        tagged.append(replace(tok, tag=tag))
    return tagged


def chunk_noun_phrases(tagged: Sequence[Token]) -> list[NounPhrase]:
    """Maximal (DT)? (JJ)* (NN|NNS|NNP)+ spans in query order."""
    chunks = []
    i, n = 0, len(tagged)
    while i < n:
        j = i
        if j < n and tagged[j].tag == "DT":
            j += 1
        while j < n and tagged[j].tag == "JJ":
            j += 1
        k = j
        while k < n and tagged[k].tag in NOUN_TAGS:
            k += 1
        if k > j:
            chunks.append(NounPhrase(tokens=tuple(tagged[i:k])))
            i = k
        else:
            i += 1
    return chunks


def remove_stop_words(tokens: Sequence[Token], stoplist: frozenset[str]) -> list[Token]:
    """Order-preserving subset of tokens whose lemma is not in the stoplist."""
    return [t for t in tokens if t.lemma not in stoplist]


def classify_location(
    tokens: Sequence[Token],
    triggers: frozenset[str] = DEFAULT_LOCATION_TRIGGERS,
    trigger_phrases: Sequence[tuple[str, ...]] = DEFAULT_LOCATION_TRIGGER_PHRASES,
) -> tuple[bool, list[str]]:
    """Detect location intent and pull out the place terms.

    A query is a location query iff any trigger term/phrase occurs. The
    location terms are the noun chunk that follows a trigger, skipping over
    prepositions and further triggers ("located from anna nagar" -> anna nagar).
    """
    lemmas = [t.lemma for t in tokens]
    n = len(lemmas)

    trigger_ends = []  # index just past each trigger occurrence
    for i, lemma in enumerate(lemmas):
        if lemma in triggers:
            trigger_ends.append(i + 1)
    for phrase in trigger_phrases:
        m = len(phrase)
        for i in range(n - m + 1):
            if tuple(lemmas[i:i + m]) == tuple(phrase):
                trigger_ends.append(i + m)

    if not trigger_ends:
        return False, []

    chunk_at = {c.tokens[0].index: c for c in chunk_noun_phrases(tokens)}
    found: list[str] = []
    for end in sorted(set(trigger_ends)):
        j = end
        while j < n and (tokens[j].tag in ("IN", "TO") or lemmas[j] in triggers):
            j += 1
        chunk = chunk_at.get(j)
        if chunk is None:
            continue
        for lemma in chunk.lemmas(drop_determiners=True):
            if lemma not in found:
                found.append(lemma)
    return True, found


class Analyzer:
    """Immutable query analyzer; safe to share across concurrent requests.

    ``individual_labels`` are lowercase ontology individual labels (e.g.
    "anna university"); chunks covering one of them become anchor terms that
    the expansion stage must never substitute.
    """

    def __init__(
        self,
        tag_lexicon: TagLexicon,
        stoplist: frozenset[str],
        location_triggers: frozenset[str] = DEFAULT_LOCATION_TRIGGERS,
        location_trigger_phrases: Sequence[tuple[str, ...]] = DEFAULT_LOCATION_TRIGGER_PHRASES,
        individual_labels: Iterable[str] = (),
    ):
        self.tag_lexicon = tag_lexicon
        self.stoplist = stoplist
        self.location_triggers = frozenset(location_triggers)
        self.location_trigger_phrases = tuple(tuple(p) for p in location_trigger_phrases)
        self.individual_labels = frozenset(lbl.lower() for lbl in individual_labels)

    def analyze(self, raw: str) -> AnalyzedQuery:
        tokens = pos_tag(tokenize(raw), self.tag_lexicon)
        phrases = chunk_noun_phrases(tokens)
        content = [t.lemma for t in remove_stop_words(tokens, self.stoplist)]
        is_location, location_terms = classify_location(
            tokens, self.location_triggers, self.location_trigger_phrases
        )

        anchors: list[str] = []

        def add_anchor(lemma: str) -> None:
            if lemma in content and lemma not in anchors:
                anchors.append(lemma)

        for phrase in phrases:
            span = phrase.lemmas()
            if any(t.tag == "NNP" for t in phrase.tokens):
                for lemma in span:
                    add_anchor(lemma)
                continue
            for lemma in self._matched_label_lemmas(span):
                add_anchor(lemma)
        for lemma in location_terms:
            add_anchor(lemma)

        return AnalyzedQuery(
            raw=raw,
            tokens=tuple(tokens),
            noun_phrases=tuple(phrases),
            content_terms=tuple(content),
            anchor_terms=tuple(anchors),
            is_location_query=is_location,
            location_terms=tuple(location_terms),
        )

    def _matched_label_lemmas(self, span: tuple[str, ...]) -> list[str]:
        """Lemmas of sub-spans that match an individual label, longest match first."""
        if not self.individual_labels:
            return []
        n = len(span)
        taken = [False] * n
        matched: list[str] = []
        for size in range(n, 0, -1):
            for start in range(0, n - size + 1):
                if any(taken[start:start + size]):
                    continue
                if " ".join(span[start:start + size]) in self.individual_labels:
                    for i in range(start, start + size):
                        taken[i] = True
                        matched.append(span[i])
        matched.sort(key=span.index)
        return matched
