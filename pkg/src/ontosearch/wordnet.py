"""WordNet 3.x flat-file database loader with base-form and synonym lookup.

Reads the standard ``index.<pos>`` / ``data.<pos>`` / ``<pos>.exc`` plain-text
layout (full database or a small fixture subset). Base forms are recovered
Morphy-style: exception list first, then suffix detachment rules, keeping only
forms that actually appear in the index.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

POS_NAMES = ("noun", "verb", "adj", "adv")
_POS_CHAR = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}
# Satellite adjectives ("s") live in the adj files.
_CHAR_POS = {"n": "noun", "v": "verb", "a": "adj", "s": "adj", "r": "adv"}

# Detachment rules: (suffix, replacement), longest suffix tried first.
_DETACHMENT = {
    "noun": (
        ("ches", "ch"), ("shes", "sh"), ("ses", "s"), ("xes", "x"), ("zes", "z"),
        ("men", "man"), ("ies", "y"), ("es", ""), ("s", ""),
    ),
    "verb": (
        ("ies", "y"), ("ing", ""), ("ing", "e"), ("ed", ""), ("ed", "e"),
        ("es", ""), ("s", ""),
    ),
    "adj": (("est", ""), ("est", "e"), ("er", ""), ("er", "e")),
    "adv": (),
}


class WordNetError(Exception):
    """Missing or malformed WordNet database file."""


@dataclass(frozen=True)
class Synset:
    """A set of lemmas sharing one sense, keyed by (pos, data-file byte offset)."""

    pos: str
    offset: int
    lemmas: tuple[str, ...]

    @property
    def id(self) -> tuple[str, int]:
        return (self.pos, self.offset)


@dataclass(frozen=True)
class SynonymEntry:
    lemma: str
    synset: tuple[str, int]


def _is_header(line: str) -> bool:
    # License/version header lines in the real files start with two spaces.
    return line.startswith(" ") or not line.strip()


def _parse_index_line(line: str, path: Path, lineno: int) -> tuple[str, str, list[int]]:
    fields = line.split()
    try:
        lemma, pos_char = fields[0], fields[1]
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
        rest = fields[4 + p_cnt:]
        # rest = sense_cnt tagsense_cnt offset...
        offsets = [int(off) for off in rest[2:2 + synset_cnt]]
        if len(offsets) != synset_cnt or pos_char not in _CHAR_POS:
            raise ValueError
    except (IndexError, ValueError):
        raise WordNetError(f"{path}:{lineno}: malformed index line") from None
    return lemma.lower(), _CHAR_POS[pos_char], offsets


def _parse_data_line(line: str, path: Path, lineno: int) -> Synset:
    body = line.split("|", 1)[0]
    fields = body.split()
    try:
        offset = int(fields[0])
        ss_type = fields[2]
        w_cnt = int(fields[3], 16)
        words = fields[4:4 + 2 * w_cnt:2]
        if len(words) != w_cnt or w_cnt == 0 or ss_type not in _CHAR_POS:
            raise ValueError
    except (IndexError, ValueError):
        raise WordNetError(f"{path}:{lineno}: malformed data line") from None
    return Synset(pos=_CHAR_POS[ss_type], offset=offset, lemmas=tuple(w.lower() for w in words))


class Lexicon:
    """Immutable lemma/synset store; concurrent reads are safe after load."""

    def __init__(
        self,
        index: dict[tuple[str, str], tuple[int, ...]],
        synsets: dict[tuple[str, int], Synset],
        exceptions: dict[str, dict[str, tuple[str, ...]]],
    ):
        self._index = index
        self._synsets = synsets
        self._exceptions = exceptions

    @property
    def synsets(self) -> dict[tuple[str, int], Synset]:
        return dict(self._synsets)

    def index_entries(self, pos: str) -> list[str]:
        return sorted(lemma for (lemma, p) in self._index if p == pos)

    def is_indexed(self, lemma: str, pos: str) -> bool:
        return (lemma.lower().replace(" ", "_"), pos) in self._index

    def synsets_for(self, lemma: str, pos: str) -> list[Synset]:
        offsets = self._index.get((lemma.lower().replace(" ", "_"), pos), ())
        return [self._synsets[(pos, off)] for off in offsets]

    def base_forms(self, word: str, pos: str) -> list[str]:
        """Candidate base forms of ``word`` that are indexed for ``pos``.

        The word itself comes first when indexed, then exception-list bases,
        then detachment-rule results; order is deterministic, no duplicates.
        """
        w = word.lower().replace(" ", "_")
        candidates: list[str] = [w]
        candidates.extend(self._exceptions.get(pos, {}).get(w, ()))
        for suffix, repl in _DETACHMENT.get(pos, ()):
            if w.endswith(suffix) and len(w) > len(suffix):
                candidates.append(w[: -len(suffix)] + repl)
        forms: list[str] = []
        for cand in candidates:
            if cand not in forms and (cand, pos) in self._index:
                forms.append(cand)
        return forms

    def synonyms(self, lemma: str, pos: str) -> list[SynonymEntry]:
        """Co-members of every synset containing a base form of ``lemma``.

        Excludes the query lemma's own base forms; deduplicated and ordered by
        (synset offset, lemma).
        """
        bases = self.base_forms(lemma, pos)
        own = set(bases) | {lemma.lower().replace(" ", "_")}
        entries: dict[str, SynonymEntry] = {}
        hits = sorted(
            {syn.id for base in bases for syn in self.synsets_for(base, pos)}
        )
        for synset_id in hits:
            for member in sorted(self._synsets[synset_id].lemmas):
                if member in own or member in entries:
                    continue
                entries[member] = SynonymEntry(lemma=member, synset=synset_id)
        return sorted(entries.values(), key=lambda e: (e.synset, e.lemma))


def load_wordnet(directory: str | Path, poses: Sequence[str] = ("noun", "verb")) -> Lexicon:
    """Load ``index.<pos>`` / ``data.<pos>`` / ``<pos>.exc`` for each requested POS.

    Raises WordNetError naming the first missing file, or with file:line for a
    malformed one. Every index offset must resolve to a parsed synset.
    """
    root = Path(directory)
    for pos in poses:
        if pos not in POS_NAMES:
            raise WordNetError(f"unknown POS {pos!r}; expected one of {POS_NAMES}")

    index: dict[tuple[str, str], tuple[int, ...]] = {}
    synsets: dict[tuple[str, int], Synset] = {}
    exceptions: dict[str, dict[str, tuple[str, ...]]] = {}

    for pos in poses:
        for name in (f"index.{pos}", f"data.{pos}", f"{pos}.exc"):
            if not (root / name).is_file():
                raise WordNetError(f"missing WordNet file: {root / name}")

        data_path = root / f"data.{pos}"
        for lineno, line in enumerate(data_path.read_text(encoding="utf-8").splitlines(), 1):
            if _is_header(line):
                continue
            syn = _parse_data_line(line, data_path, lineno)
            synsets[syn.id] = syn

        index_path = root / f"index.{pos}"
        for lineno, line in enumerate(index_path.read_text(encoding="utf-8").splitlines(), 1):
            if _is_header(line):
                continue
            lemma, line_pos, offsets = _parse_index_line(line, index_path, lineno)
            for off in offsets:
                if (line_pos, off) not in synsets:
                    raise WordNetError(
                        f"{index_path}:{lineno}: offset {off:08d} not found in data.{pos}"
                    )
            index[(lemma, line_pos)] = tuple(offsets)

        exc_path = root / f"{pos}.exc"
        exc: dict[str, tuple[str, ...]] = {}
        for lineno, line in enumerate(exc_path.read_text(encoding="utf-8").splitlines(), 1):
            if _is_header(line):
                continue
            fields = line.split()
            if len(fields) < 2:
                raise WordNetError(f"{exc_path}:{lineno}: malformed exception line")
            exc[fields[0].lower()] = tuple(f.lower() for f in fields[1:])
        exceptions[pos] = exc

    return Lexicon(index=index, synsets=synsets, exceptions=exceptions)
