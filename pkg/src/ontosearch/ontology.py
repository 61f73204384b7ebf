"""Turtle-subset ontology parsing and domain-keyword extraction.

The supported Turtle subset is what a Protégé export of a class/individual
hierarchy needs: ``@prefix`` directives, ``a`` / ``rdfs:subClassOf`` /
``rdfs:label`` / ``owl:equivalentClass`` triples, ``;`` and ``,``
abbreviation, comments, and plain or language-tagged literals. Everything
else is skipped with a warning.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Mapping, Sequence

log = logging.getLogger(__name__)

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
RDFS_SUBCLASS = "http://www.w3.org/2000/01/rdf-schema#subClassOf"
RDFS_LABEL = "http://www.w3.org/2000/01/rdf-schema#label"
OWL_EQUIVALENT = "http://www.w3.org/2002/07/owl#equivalentClass"
OWL_CLASS = "http://www.w3.org/2002/07/owl#Class"
OWL_INDIVIDUAL = "http://www.w3.org/2002/07/owl#NamedIndividual"
_OWL_NS = "http://www.w3.org/2002/07/owl#"

# Relation weights for extracted keywords; higher weight wins on collision.
RELATION_WEIGHTS = {
    "self": 1.0,
    "equivalent": 0.9,
    "parent": 0.6,
    "child": 0.6,
    "sibling": 0.5,
}

# Function words ignored when splitting multi-word labels into keyword tokens.
_LABEL_TOKEN_STOPLIST = frozenset({"a", "an", "the", "of", "and", "for", "in", "on", "at", "to"})


class OntologyError(Exception):
    """Turtle syntax error, undeclared prefix, or hierarchy validation failure."""


@dataclass
class Concept:
    iri: str
    kind: str  # "class" | "individual"
    labels: tuple[str, ...]
    parents: tuple[str, ...] = ()
    children: tuple[str, ...] = ()
    equivalents: tuple[str, ...] = ()


@dataclass(frozen=True)
class ConceptMatch:
    """A query term or phrase matched against a concept label.

    ``query_term`` is the lemma string that matched (for phrase matches, the
    space-joined phrase; for base-form matches, the base form). ``terms``
    lists the original single content terms the match covers.
    """

    query_term: str
    concept: str
    match_kind: str  # "exact-label" | "label-token"
    terms: tuple[str, ...]


@dataclass(frozen=True)
class KeywordEntry:
    keyword: str
    source: str  # concept iri whose match produced this keyword
    relation: str
    weight: float
    is_label: bool  # full concept label vs token of a multi-word label


class DomainKeywordSet:
    """Keyword lemma -> provenance entry, in deterministic (-weight, keyword) order."""

    def __init__(self, entries: Iterable[KeywordEntry] = (), matches: Sequence[ConceptMatch] = ()):
        best: dict[str, KeywordEntry] = {}
        for entry in entries:
            cur = best.get(entry.keyword)
            if cur is None or (entry.weight, entry.is_label) > (cur.weight, cur.is_label):
                best[entry.keyword] = entry
        self._entries = dict(
            sorted(best.items(), key=lambda kv: (-kv[1].weight, kv[0]))
        )
        self.matches = tuple(matches)

    def __contains__(self, keyword: str) -> bool:
        return keyword in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def get(self, keyword: str) -> KeywordEntry | None:
        return self._entries.get(keyword)

    def entries(self) -> list[KeywordEntry]:
        return list(self._entries.values())

    def keywords(self) -> list[str]:
        return list(self._entries)

    def total_weight(self) -> float:
        return sum(e.weight for e in self._entries.values())

    def merged_with(self, extra: Iterable[KeywordEntry]) -> "DomainKeywordSet":
        return DomainKeywordSet([*self._entries.values(), *extra], matches=self.matches)

    def to_json_dict(self) -> list[dict]:
        return [
            {"keyword": e.keyword, "source": e.source, "relation": e.relation, "weight": e.weight}
            for e in self._entries.values()
        ]


class ConceptGraph:
    """Immutable concept store with label indexes and equivalence merging."""

    def __init__(self, concepts: Mapping[str, Concept], prefix_map: Mapping[str, str]):
        self.concepts = dict(sorted(concepts.items()))
        self.prefix_map = dict(prefix_map)
        self._label_index: dict[str, list[str]] = {}
        self._token_index: dict[str, list[str]] = {}
        for iri, concept in self.concepts.items():
            for label in concept.labels:
                self._label_index.setdefault(label, []).append(iri)
                for tok in label.split():
                    if tok not in _LABEL_TOKEN_STOPLIST:
                        self._token_index.setdefault(tok, []).append(iri)

    def __len__(self) -> int:
        return len(self.concepts)

    def by_label(self, label: str) -> list[str]:
        return list(self._label_index.get(label.lower(), ()))

    def by_label_token(self, token: str) -> list[str]:
        return list(self._token_index.get(token.lower(), ()))

    def individual_labels(self) -> set[str]:
        return {
            label
            for c in self.concepts.values()
            if c.kind == "individual"
            for label in c.labels
        }

    def equivalence_class(self, iri: str) -> set[str]:
        seen = {iri}
        frontier = [iri]
        while frontier:
            cur = frontier.pop()
            for other in self.concepts[cur].equivalents:
                if other not in seen:
                    seen.add(other)
                    frontier.append(other)
        return seen

    def merged_parents(self, iris: set[str]) -> set[str]:
        """Parent concepts of a merged class, expanded to equivalence classes."""
        out: set[str] = set()
        for iri in iris:
            for p in self.concepts[iri].parents:
                out.update(self.equivalence_class(p))
        return out - set(iris)

    def merged_children(self, iris: set[str]) -> set[str]:
        out: set[str] = set()
        for iri in iris:
            for c in self.concepts[iri].children:
                out.update(self.equivalence_class(c))
        return out - set(iris)


# --- Turtle tokenizer/parser ---------------------------------------------

_TURTLE_TOKEN = re.compile(
    r"""
      (?P<comment>\#[^\n]*)
    | (?P<prefix_kw>@prefix\b)
    | (?P<iriref><[^<>\s]*>)
    | (?P<string>"(?:[^"\\]|\\.)*")
    | (?P<langtag>@[a-zA-Z][a-zA-Z0-9-]*)
    | (?P<pname>[A-Za-z0-9_][A-Za-z0-9_.-]*:[A-Za-z0-9_][A-Za-z0-9_.-]*|:[A-Za-z0-9_][A-Za-z0-9_.-]*|[A-Za-z0-9_][A-Za-z0-9_.-]*:|:)
    | (?P<a_kw>\ba\b)
    | (?P<punct>[.;,])
    | (?P<ws>\s+)
    | (?P<bad>.)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    value: str
    line: int
    col: int


def _tokenize_turtle(text: str) -> list[_Tok]:
    tokens = []
    line, col = 1, 1
    for m in _TURTLE_TOKEN.finditer(text):
        kind = m.lastgroup
        value = m.group()
        if kind == "bad":
            raise OntologyError(f"syntax error at line {line}, column {col}: unexpected {value!r}")
        if kind not in ("ws", "comment"):
            tokens.append(_Tok(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
    return tokens


_STRING_ESCAPES = {"\\n": "\n", "\\t": "\t", "\\r": "\r", '\\"': '"', "\\\\": "\\"}


def _unescape(raw: str) -> str:
    return re.sub(r"\\[ntr\"\\]", lambda m: _STRING_ESCAPES[m.group()], raw[1:-1])


class _TurtleParser:
    """Recursive-descent parser for the subset grammar; collects triples."""

    def __init__(self, text: str):
        self.tokens = _tokenize_turtle(text)
        self.pos = 0
        self.prefixes: dict[str, str] = {}
        self.triples: list[tuple[str, str, tuple]] = []

    def _peek(self) -> _Tok | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str | None = None) -> _Tok:
        tok = self._peek()
        if tok is None:
            raise OntologyError("syntax error: unexpected end of document")
        if expected and tok.kind != expected:
            raise OntologyError(
                f"syntax error at line {tok.line}, column {tok.col}: "
                f"expected {expected}, found {tok.value!r}"
            )
        self.pos += 1
        return tok

    def _expect_punct(self, char: str) -> None:
        tok = self._next("punct")
        if tok.value != char:
            raise OntologyError(
                f"syntax error at line {tok.line}, column {tok.col}: expected {char!r}"
            )

    def _resolve(self, tok: _Tok) -> str:
        if tok.kind == "iriref":
            return tok.value[1:-1]
        prefix, _, local = tok.value.partition(":")
        if prefix not in self.prefixes:
            raise OntologyError(
                f"undeclared prefix {prefix + ':'!r} at line {tok.line}, column {tok.col}"
            )
        return self.prefixes[prefix] + local

    def parse(self) -> None:
        while self._peek() is not None:
            if self._peek().kind == "prefix_kw":
                self._parse_prefix()
            else:
                self._parse_statement()

    def _parse_prefix(self) -> None:
        self._next("prefix_kw")
        name_tok = self._next("pname")
        if not name_tok.value.endswith(":"):
            raise OntologyError(
                f"syntax error at line {name_tok.line}: malformed prefix name {name_tok.value!r}"
            )
        iri_tok = self._next("iriref")
        self.prefixes[name_tok.value[:-1]] = iri_tok.value[1:-1]
        self._expect_punct(".")

    def _parse_statement(self) -> None:
        subj_tok = self._next()
        if subj_tok.kind not in ("pname", "iriref"):
            raise OntologyError(
                f"syntax error at line {subj_tok.line}, column {subj_tok.col}: "
                f"expected subject, found {subj_tok.value!r}"
            )
        subject = self._resolve(subj_tok)
        while True:
            pred_tok = self._next()
            if pred_tok.kind == "a_kw":
                predicate = RDF_TYPE
            elif pred_tok.kind in ("pname", "iriref"):
                predicate = self._resolve(pred_tok)
            else:
                raise OntologyError(
                    f"syntax error at line {pred_tok.line}, column {pred_tok.col}: "
                    f"expected predicate, found {pred_tok.value!r}"
                )
            while True:
                self._parse_object(subject, predicate)
                nxt = self._next("punct")
                if nxt.value != ",":
                    break
            if nxt.value == ";":
                if self._peek() is not None and self._peek().kind == "punct":
                    nxt = self._next("punct")  # trailing ';' before '.'
                    break
                continue
            break
        if nxt.value != ".":
            raise OntologyError(
                f"syntax error at line {nxt.line}, column {nxt.col}: expected '.'"
            )

    def _parse_object(self, subject: str, predicate: str) -> None:
        tok = self._next()
        if tok.kind == "string":
            value = _unescape(tok.value)
            if self._peek() is not None and self._peek().kind == "langtag":
                self._next()
            self.triples.append((subject, predicate, ("literal", value)))
        elif tok.kind in ("pname", "iriref"):
            self.triples.append((subject, predicate, ("iri", self._resolve(tok))))
        else:
            raise OntologyError(
                f"syntax error at line {tok.line}, column {tok.col}: "
                f"expected object, found {tok.value!r}"
            )


def _local_name(iri: str) -> str:
    local = re.split(r"[#/]", iri)[-1]
    words = re.findall(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+|[A-Z]+|\d+", local.replace("_", " "))
    return " ".join(w.lower() for w in words) or iri.lower()


def parse_turtle(text: str) -> ConceptGraph:
    """Parse a Turtle-subset document into a validated ConceptGraph.

    Labels are lowercased; parent/child edges are materialized in both
    directions; a subclass cycle among non-equivalent classes is an error.
    """
    parser = _TurtleParser(text)
    parser.parse()

    types: dict[str, list[str]] = {}
    labels: dict[str, list[str]] = {}
    parents: dict[str, list[str]] = {}
    equivalents: dict[str, list[str]] = {}
    mentioned: list[str] = []
    skipped: set[str] = set()

    def note(iri: str) -> None:
        if iri not in types and not iri.startswith(_OWL_NS):
            types[iri] = []
            mentioned.append(iri)

    for subject, predicate, obj in parser.triples:
        if predicate == RDF_TYPE and obj[0] == "iri":
            note(subject)
            if subject in types:
                types[subject].append(obj[1])
            if not obj[1].startswith(_OWL_NS):
                note(obj[1])
        elif predicate == RDFS_SUBCLASS and obj[0] == "iri":
            note(subject)
            note(obj[1])
            parents.setdefault(subject, []).append(obj[1])
        elif predicate == RDFS_LABEL and obj[0] == "literal":
            note(subject)
            if subject in types:
                labels.setdefault(subject, []).append(obj[1].lower())
        elif predicate == OWL_EQUIVALENT and obj[0] == "iri":
            note(subject)
            note(obj[1])
            equivalents.setdefault(subject, []).append(obj[1])
            equivalents.setdefault(obj[1], []).append(subject)
        else:
            if predicate not in skipped:
                skipped.add(predicate)
                log.warning("ignoring unsupported predicate %s", predicate)

    class_iris = set(parents)
    for plist in parents.values():
        class_iris.update(plist)
    for iri, tlist in types.items():
        if OWL_CLASS in tlist:
            class_iris.add(iri)
        for t in tlist:
            if not t.startswith(_OWL_NS):
                class_iris.add(t)
    class_iris &= set(types)

    concepts: dict[str, Concept] = {}
    children: dict[str, list[str]] = {}
    for iri in mentioned:
        tlist = types[iri]
        is_individual = OWL_INDIVIDUAL in tlist or (
            iri not in class_iris and any(not t.startswith(_OWL_NS) for t in tlist)
        )
        if iri not in class_iris and not is_individual and iri not in labels:
            continue  # typed only as owl:Ontology or similar
        kind = "individual" if is_individual else "class"
        concept_parents = list(dict.fromkeys(parents.get(iri, [])))
        if kind == "individual":
            concept_parents = list(dict.fromkeys(
                concept_parents + [t for t in tlist if not t.startswith(_OWL_NS)]
            ))
        concept_labels = list(dict.fromkeys(labels.get(iri, []))) or [_local_name(iri)]
        concepts[iri] = Concept(
            iri=iri,
            kind=kind,
            labels=tuple(concept_labels),
            parents=tuple(concept_parents),
            equivalents=tuple(dict.fromkeys(equivalents.get(iri, []))),
        )
        for p in concept_parents:
            children.setdefault(p, []).append(iri)

    for iri, concept in concepts.items():
        missing = [p for p in concept.parents if p not in concepts]
        if missing:
            raise OntologyError(f"{iri} references undefined concept {missing[0]}")
        bad_eq = [e for e in concept.equivalents if e not in concepts]
        if bad_eq:
            raise OntologyError(f"{iri} equivalent to undefined concept {bad_eq[0]}")
        concepts[iri] = replace(concept, children=tuple(dict.fromkeys(children.get(iri, []))))

    graph = ConceptGraph(concepts, parser.prefixes)
    _check_acyclic(graph)
    return graph


def _check_acyclic(graph: ConceptGraph) -> None:
    """Reject subclass cycles among non-equivalent classes (DFS over merged nodes)."""
    rep: dict[str, str] = {}
    for iri in graph.concepts:
        if iri not in rep:
            group = graph.equivalence_class(iri)
            leader = min(group)
            for member in group:
                rep[member] = leader

    edges: dict[str, set[str]] = {}
    for iri, concept in graph.concepts.items():
        for p in concept.parents:
            if rep[iri] != rep[p]:
                edges.setdefault(rep[iri], set()).add(rep[p])

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {node: WHITE for node in rep.values()}
    path: list[str] = []

    def dfs(node: str) -> None:
        color[node] = GRAY
        path.append(node)
        for nxt in sorted(edges.get(node, ())):
            if color[nxt] == GRAY:
                cycle = path[path.index(nxt):] + [nxt]
                raise OntologyError("subclass cycle: " + " -> ".join(cycle))
            if color[nxt] == WHITE:
                dfs(nxt)
        path.pop()
        color[node] = BLACK

    for node in sorted(set(rep.values())):
        if color[node] == WHITE:
            dfs(node)


def serialize_turtle(graph: ConceptGraph) -> str:
    """Serialize a ConceptGraph back to the Turtle subset (round-trips losslessly)."""
    prefixes = dict(graph.prefix_map)
    for required, iri in (
        ("rdfs", "http://www.w3.org/2000/01/rdf-schema#"),
        ("owl", "http://www.w3.org/2002/07/owl#"),
    ):
        if required not in prefixes:
            prefixes[required] = iri

    def term(iri: str) -> str:
        for prefix, base in sorted(prefixes.items(), key=lambda kv: -len(kv[1])):
            if iri.startswith(base) and re.fullmatch(r"[A-Za-z0-9_.-]+", iri[len(base):]):
                return f"{prefix}:{iri[len(base):]}"
        return f"<{iri}>"

    lines = [f"@prefix {p}: <{iri}> ." for p, iri in sorted(prefixes.items())]
    lines.append("")
    for iri, concept in graph.concepts.items():
        parts = []
        if concept.kind == "class":
            parts.append("a owl:Class")
            for p in concept.parents:
                parts.append(f"rdfs:subClassOf {term(p)}")
        else:
            parts.append("a owl:NamedIndividual")
            for p in concept.parents:
                parts.append(f"a {term(p)}")
        for eq in concept.equivalents:
            if iri < eq:
                parts.append(f"owl:equivalentClass {term(eq)}")
        labels = ", ".join('"{}"'.format(l.replace("\\", "\\\\").replace('"', '\\"'))
                           for l in concept.labels)
        parts.append(f"rdfs:label {labels}")
        lines.append(f"{term(iri)} " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + "\n"


def merge_graphs(graphs: Sequence[ConceptGraph]) -> ConceptGraph:
    """Union of several graphs; duplicate IRIs merge by label/edge union."""
    if len(graphs) == 1:
        return graphs[0]
    concepts: dict[str, Concept] = {}
    prefix_map: dict[str, str] = {}
    for graph in graphs:
        for prefix, iri in graph.prefix_map.items():
            prefix_map.setdefault(prefix, iri)
        for iri, concept in graph.concepts.items():
            if iri not in concepts:
                concepts[iri] = concept
                continue
            cur = concepts[iri]
            concepts[iri] = Concept(
                iri=iri,
                kind="individual" if "individual" in (cur.kind, concept.kind) else "class",
                labels=tuple(dict.fromkeys(cur.labels + concept.labels)),
                parents=tuple(dict.fromkeys(cur.parents + concept.parents)),
                children=tuple(dict.fromkeys(cur.children + concept.children)),
                equivalents=tuple(dict.fromkeys(cur.equivalents + concept.equivalents)),
            )
    merged = ConceptGraph(concepts, prefix_map)
    _check_acyclic(merged)
    return merged


# --- Matching and keyword extraction --------------------------------------

def match_concepts(
    terms: Sequence[str],
    phrases: Sequence[Sequence[str]],
    graph: ConceptGraph,
    base_forms: Callable[[str], Sequence[str]] | None = None,
) -> list[ConceptMatch]:
    """Match query terms/phrases against concept labels, longest match first.

    Order of preference: multi-word phrase sub-spans against full labels, then
    single terms (or their base forms) against full labels, then single terms
    against tokens of multi-word labels. Each query term contributes to at
    most one match.
    """
    consumed: set[str] = set()
    matches: list[ConceptMatch] = []

    def pick(iris: list[str]) -> str:
        return sorted(iris)[0]

    for phrase in phrases:
        span = tuple(phrase)
        n = len(span)
        taken = [t in consumed for t in span]
        for size in range(n, 1, -1):
            for start in range(0, n - size + 1):
                if any(taken[start:start + size]):
                    continue
                text = " ".join(span[start:start + size])
                iris = graph.by_label(text)
                if not iris:
                    continue
                covered = tuple(span[start:start + size])
                matches.append(ConceptMatch(text, pick(iris), "exact-label", covered))
                for i in range(start, start + size):
                    taken[i] = True
                consumed.update(covered)

    for term in terms:
        if term in consumed:
            continue
        variants = [term]
        if base_forms is not None:
            variants.extend(v for v in base_forms(term) if v not in variants)
        hit = None
        for variant in variants:
            iris = graph.by_label(variant)
            if iris:
                hit = ConceptMatch(variant, pick(iris), "exact-label", (term,))
                break
        if hit:
            matches.append(hit)
            consumed.add(term)

    for term in terms:
        if term in consumed:
            continue
        iris = graph.by_label_token(term)
        if iris:
            matches.append(ConceptMatch(term, pick(iris), "label-token", (term,)))
            consumed.add(term)

    return matches


def _add_label_entries(
    entries: list[KeywordEntry], labels: Iterable[str], source: str, relation: str
) -> None:
    weight = RELATION_WEIGHTS[relation]
    for label in labels:
        entries.append(KeywordEntry(label, source, relation, weight, is_label=True))
        tokens = label.split()
        if len(tokens) > 1:
            for tok in tokens:
                if tok not in _LABEL_TOKEN_STOPLIST:
                    entries.append(KeywordEntry(tok, source, relation, weight, is_label=False))


def extract_domain_keywords(
    matches: Sequence[ConceptMatch],
    graph: ConceptGraph,
    depth: int = 1,
    include_siblings: bool = True,
) -> DomainKeywordSet:
    """Harvest labels of matched concepts and their ontology neighborhood.

    Per matched concept: own labels (self), labels of equivalents, labels of
    ancestors/descendants up to ``depth`` hops (parent/child), and labels of
    siblings when ``depth`` >= 1. Multi-word labels also contribute their
    content tokens at the same weight. Higher weight wins on collision.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    entries: list[KeywordEntry] = []
    for match in matches:
        source = match.concept
        eq_class = graph.equivalence_class(source)
        _add_label_entries(entries, graph.concepts[source].labels, source, "self")
        for iri in sorted(eq_class - {source}):
            _add_label_entries(entries, graph.concepts[iri].labels, source, "equivalent")

        for step, relation in ((graph.merged_parents, "parent"), (graph.merged_children, "child")):
            frontier = set(eq_class)
            seen = set(eq_class)
            for _ in range(depth):
                frontier = step(frontier) - seen
                if not frontier:
                    break
                seen.update(frontier)
                for iri in sorted(frontier):
                    _add_label_entries(entries, graph.concepts[iri].labels, source, relation)

        if include_siblings and depth >= 1:
            siblings = graph.merged_children(graph.merged_parents(eq_class)) - eq_class
            for iri in sorted(siblings):
                _add_label_entries(entries, graph.concepts[iri].labels, source, "sibling")

    return DomainKeywordSet(entries, matches=matches)
