"""Combine lexicon synonyms and ontology keywords into per-term expansions,
then generate a bounded, prior-ordered set of refined queries.

"Refinement" here is per-slot substitution: each content term is one slot,
anchors are fixed, and every refined query is one choice of expansion per
slot. Priors multiply the chosen expansion weights, so the unmodified query
always comes first with prior 1.0.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping, Sequence

from ontosearch.ontology import DomainKeywordSet
from ontosearch.textanalysis import AnalyzedQuery
from ontosearch.wordnet import Lexicon

ONTOLOGY_WEIGHT_SCALE = 0.9
WORDNET_WEIGHT = 0.8

_POS_CLASS = {"NN": "noun", "NNS": "noun", "NNP": "noun",
              "VB": "verb", "VBG": "verb", "VBD": "verb", "VBZ": "verb"}


@dataclass(frozen=True)
class Expansion:
    lemma: str
    source: str  # "self" | "ontology" | "wordnet"
    weight: float


class ExpansionMap:
    """Ordered content-term -> ranked Expansion list (self entry always first)."""

    def __init__(self, terms: Mapping[str, Sequence[Expansion]]):
        self._terms = {t: tuple(exps) for t, exps in terms.items()}

    def __getitem__(self, term: str) -> tuple[Expansion, ...]:
        return self._terms[term]

    def __contains__(self, term: str) -> bool:
        return term in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def to_json_dict(self) -> dict:
        return {
            term: [{"lemma": e.lemma, "source": e.source, "weight": e.weight} for e in exps]
            for term, exps in self._terms.items()
        }


@dataclass(frozen=True)
class RefinedQuery:
    id: int
    terms: tuple[str, ...]
    prior: float
    provenance: Mapping[str, Expansion]

    @property
    def text(self) -> str:
        return " ".join(self.terms)

    def to_json_dict(self) -> dict:
        return {"id": self.id, "terms": list(self.terms), "prior": self.prior}


def _pos_class_for(analyzed: AnalyzedQuery, term: str) -> str | None:
    for tok in analyzed.tokens:
        if tok.lemma == term:
            return _POS_CLASS.get(tok.tag or "")
    return None


def build_expansion_map(
    analyzed: AnalyzedQuery,
    lexicon: Lexicon | None,
    keywords: DomainKeywordSet,
    e_max: int = 5,
) -> ExpansionMap:
    """Per content term: self entry, ontology keyword candidates, lexicon synonyms.

    Ontology candidates are full labels of keywords whose source concept this
    term matched, at DomainKeywordSet weight x0.9; synonym candidates carry
    weight 0.8. Anchors get the self entry only. Lists are deduplicated by
    lemma (max weight wins), sorted by descending weight then lemma, and
    capped at ``e_max`` entries.
    """
    anchors = set(analyzed.anchor_terms)
    term_concepts: dict[str, set[str]] = {}
    for match in keywords.matches:
        for term in match.terms:
            term_concepts.setdefault(term, set()).add(match.concept)

    terms: dict[str, tuple[Expansion, ...]] = {}
    for term in analyzed.content_terms:
        if term in terms:
            continue
        if term in anchors:
            terms[term] = (Expansion(term, "self", 1.0),)
            continue

        best: dict[str, Expansion] = {}

        def offer(lemma: str, source: str, weight: float) -> None:
            if lemma == term:
                return
            cur = best.get(lemma)
            if cur is None or weight > cur.weight:
                best[lemma] = Expansion(lemma, source, weight)

        sources = term_concepts.get(term, set())
        for entry in keywords.entries():
            if entry.is_label and entry.source in sources:
                offer(entry.keyword, "ontology", entry.weight * ONTOLOGY_WEIGHT_SCALE)

        pos_class = _pos_class_for(analyzed, term)
        if lexicon is not None and pos_class is not None:
            for syn in lexicon.synonyms(term, pos_class):
                offer(syn.lemma.replace("_", " "), "wordnet", WORDNET_WEIGHT)

        ranked = sorted(best.values(), key=lambda e: (-e.weight, e.lemma))
        terms[term] = (Expansion(term, "self", 1.0), *ranked[: max(e_max - 1, 0)])

    return ExpansionMap(terms)


def generate_refined_queries(
    emap: ExpansionMap,
    analyzed: AnalyzedQuery,
    q_max: int = 16,
) -> list[RefinedQuery]:
    """Enumerate per-slot substitution combinations, best prior first.

    Emits at most ``q_max`` queries ordered by descending prior (ties broken
    lexicographically on terms); drops candidates whose term multiset was
    already emitted. The all-self combination is always emitted first.
    """
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    slots = [term for term in dict.fromkeys(analyzed.content_terms) if term in emap]
    options = [emap[term] for term in slots]

    # Best-first search over choice vectors; weights per slot are sorted
    # descending, so bumping one index never increases the prior.
    def prior_of(choice: tuple[int, ...]) -> float:
        p = 1.0
        for slot, idx in enumerate(choice):
            p *= options[slot][idx].weight
        return p

    def terms_of(choice: tuple[int, ...]) -> tuple[str, ...]:
        return tuple(options[slot][idx].lemma for slot, idx in enumerate(choice))

    start = tuple(0 for _ in slots)
    heap = [(-1.0, terms_of(start), start)]
    seen_states = {start}
    collected: list[tuple[float, tuple[str, ...], tuple[int, ...]]] = []
    seen_multisets: set[tuple[str, ...]] = set()
    boundary: float | None = None

    while heap:
        neg_prior, terms, choice = heapq.heappop(heap)
        prior = -neg_prior
        if boundary is not None and prior < boundary:
            break
        multiset = tuple(sorted(terms))
        if multiset not in seen_multisets:
            seen_multisets.add(multiset)
            collected.append((prior, terms, choice))
            if len(collected) == q_max and boundary is None:
                boundary = prior  # keep draining ties at the cutoff prior
        for slot in range(len(slots)):
            if choice[slot] + 1 < len(options[slot]):
                nxt = choice[:slot] + (choice[slot] + 1,) + choice[slot + 1:]
                if nxt not in seen_states:
                    seen_states.add(nxt)
                    heapq.heappush(heap, (-prior_of(nxt), terms_of(nxt), nxt))

    collected.sort(key=lambda item: (-item[0], item[1]))
    queries = []
    for qid, (prior, terms, choice) in enumerate(collected[:q_max]):
        provenance = {slots[i]: options[i][choice[i]] for i in range(len(slots))}
        queries.append(RefinedQuery(id=qid, terms=terms, prior=prior, provenance=provenance))
    return queries
