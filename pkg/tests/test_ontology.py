import pytest

from ontosearch.ontology import (
    OntologyError,
    extract_domain_keywords,
    match_concepts,
    merge_graphs,
    parse_turtle,
    serialize_turtle,
)

PREFIXES = """\
@prefix : <http://example.org/test#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
"""

FACULTY_DOC = PREFIXES + """
:Employee a owl:Class ; rdfs:label "employee" .
:Faculty rdfs:subClassOf :Employee ; rdfs:label "faculty", "teaching staff" .
"""


def graph_shape(graph):
    return {
        iri: (c.kind, c.labels, tuple(sorted(c.parents)), tuple(sorted(c.equivalents)))
        for iri, c in graph.concepts.items()
    }


class TestParse:
    def test_two_concepts_with_parent(self):
        graph = parse_turtle(FACULTY_DOC)
        assert len(graph) == 2
        faculty = graph.concepts["http://example.org/test#Faculty"]
        assert faculty.parents == ("http://example.org/test#Employee",)
        assert faculty.labels == ("faculty", "teaching staff")
        employee = graph.concepts["http://example.org/test#Employee"]
        assert employee.children == ("http://example.org/test#Faculty",)

    def test_prefix_only_document(self):
        assert len(parse_turtle(PREFIXES)) == 0

    def test_cycle_is_rejected(self):
        doc = PREFIXES + """
:A rdfs:subClassOf :B . :B rdfs:subClassOf :A .
"""
        with pytest.raises(OntologyError, match="cycle"):
            parse_turtle(doc)

    def test_equivalent_cycle_allowed(self):
        doc = PREFIXES + """
:A a owl:Class ; owl:equivalentClass :B ; rdfs:label "a" .
:B a owl:Class ; rdfs:label "b" .
"""
        graph = parse_turtle(doc)
        assert graph.equivalence_class("http://example.org/test#A") == {
            "http://example.org/test#A", "http://example.org/test#B",
        }

    def test_undeclared_prefix(self):
        with pytest.raises(OntologyError, match="undeclared prefix"):
            parse_turtle('@prefix : <http://x#> .\n:A rdfs:label "a" .')

    def test_syntax_error_has_position(self):
        with pytest.raises(OntologyError, match=r"line \d+"):
            parse_turtle(PREFIXES + "\n:A rdfs:label ; .")

    def test_language_tags_and_comments(self):
        doc = PREFIXES + """
# a comment
:A a owl:Class ; rdfs:label "alpha"@en , "beta" .  # trailing comment
"""
        graph = parse_turtle(doc)
        assert graph.concepts["http://example.org/test#A"].labels == ("alpha", "beta")

    def test_unsupported_predicate_skipped(self, caplog):
        doc = PREFIXES + """
:A a owl:Class ; rdfs:label "a" ; rdfs:comment "ignored" .
"""
        with caplog.at_level("WARNING"):
            graph = parse_turtle(doc)
        assert len(graph) == 1
        assert any("unsupported predicate" in r.message for r in caplog.records)

    def test_individual_via_class_type(self):
        doc = PREFIXES + """
:University a owl:Class ; rdfs:label "university" .
:AnnaUniversity a :University ; rdfs:label "anna university" .
"""
        graph = parse_turtle(doc)
        anna = graph.concepts["http://example.org/test#AnnaUniversity"]
        assert anna.kind == "individual"
        assert anna.parents == ("http://example.org/test#University",)
        assert graph.individual_labels() == {"anna university"}

    def test_missing_label_defaults_to_local_name(self):
        doc = PREFIXES + ":TeachingStaff a owl:Class .\n"
        graph = parse_turtle(doc)
        assert graph.concepts["http://example.org/test#TeachingStaff"].labels == ("teaching staff",)

    def test_edge_consistency(self, graph):
        for iri, concept in graph.concepts.items():
            for parent in concept.parents:
                assert iri in graph.concepts[parent].children
            for child in concept.children:
                assert iri in graph.concepts[child].parents


class TestRoundTrip:
    def test_bundled_ontology(self, graph):
        assert graph_shape(parse_turtle(serialize_turtle(graph))) == graph_shape(graph)

    def test_small_fixture(self):
        graph = parse_turtle(FACULTY_DOC)
        assert graph_shape(parse_turtle(serialize_turtle(graph))) == graph_shape(graph)

    def test_label_with_quote(self):
        doc = PREFIXES + ':A a owl:Class ; rdfs:label "the \\"x\\" label" .\n'
        graph = parse_turtle(doc)
        assert graph_shape(parse_turtle(serialize_turtle(graph))) == graph_shape(graph)


class TestMerge:
    def test_duplicate_iris_merge_labels(self):
        first = parse_turtle(PREFIXES + ':A a owl:Class ; rdfs:label "a" .\n')
        second = parse_turtle(PREFIXES + ':A a owl:Class ; rdfs:label "alpha" .\n')
        merged = merge_graphs([first, second])
        assert merged.concepts["http://example.org/test#A"].labels == ("a", "alpha")

    def test_single_graph_passthrough(self, graph):
        assert merge_graphs([graph]) is graph


class TestMatch:
    def test_phrase_exact_label(self):
        graph = parse_turtle(FACULTY_DOC)
        matches = match_concepts(
            ["teaching", "staff"], [("teaching", "staff")], graph
        )
        assert len(matches) == 1
        match = matches[0]
        assert match.query_term == "teaching staff"
        assert match.concept.endswith("#Faculty")
        assert match.match_kind == "exact-label"
        assert match.terms == ("teaching", "staff")

    def test_no_labels_no_match(self):
        graph = parse_turtle(FACULTY_DOC)
        assert match_concepts(["quantum", "flux"], [], graph) == []

    def test_label_token_match(self):
        graph = parse_turtle(FACULTY_DOC)
        matches = match_concepts(["staff"], [], graph)
        assert len(matches) == 1
        assert matches[0].match_kind == "label-token"
        assert matches[0].concept.endswith("#Faculty")

    def test_base_form_match(self):
        graph = parse_turtle(FACULTY_DOC)
        matches = match_concepts(
            ["faculties"], [], graph, base_forms=lambda t: ["faculty"]
        )
        assert len(matches) == 1
        assert matches[0].query_term == "faculty"
        assert matches[0].match_kind == "exact-label"
        assert matches[0].terms == ("faculties",)

    def test_each_term_matches_at_most_once(self, graph, base_forms):
        terms = ("teaching", "staff", "anna", "university")
        phrases = [("the", "teaching", "staff"), ("anna", "university")]
        matches = match_concepts(terms, phrases, graph, base_forms=base_forms)
        covered = [t for m in matches for t in m.terms]
        assert len(covered) == len(set(covered))


class TestExtractKeywords:
    def test_golden_keyword_set(self, graph, analyzer, base_forms):
        analyzed = analyzer.analyze("list the teaching staff in anna university")
        matches = match_concepts(
            analyzed.content_terms,
            [np.lemmas() for np in analyzed.noun_phrases],
            graph,
            base_forms=base_forms,
        )
        keywords = extract_domain_keywords(matches, graph, depth=1)
        assert {"faculty", "staff", "employee", "people", "teaching", "anna", "university"} <= set(
            keywords.keywords()
        )

    def test_empty_matches(self, graph):
        assert len(extract_domain_keywords([], graph)) == 0

    def test_depth_zero_chain(self):
        doc = PREFIXES + """
:A a owl:Class ; rdfs:label "alpha" .
:B rdfs:subClassOf :A ; rdfs:label "beta" .
:C rdfs:subClassOf :B ; rdfs:label "gamma" .
"""
        graph = parse_turtle(doc)
        matches = match_concepts(["beta"], [], graph)
        keywords = extract_domain_keywords(matches, graph, depth=0)
        assert set(keywords.keywords()) == {"beta"}

    def test_depth_monotonicity(self, graph, base_forms, analyzer):
        analyzed = analyzer.analyze("fees for the m.b.a course in anna university")
        matches = match_concepts(
            analyzed.content_terms,
            [np.lemmas() for np in analyzed.noun_phrases],
            graph,
            base_forms=base_forms,
        )
        previous = set()
        for depth in (0, 1, 2, 3):
            current = set(extract_domain_keywords(matches, graph, depth=depth).keywords())
            assert previous <= current
            previous = current

    def test_weights_follow_relations(self):
        graph = parse_turtle(FACULTY_DOC)
        keywords = extract_domain_keywords(match_concepts(["faculty"], [], graph), graph)
        assert keywords.get("faculty").weight == 1.0
        assert keywords.get("employee").weight == 0.6

    def test_bfs_reachability_oracle(self, graph, analyzer, base_forms):
        """Every keyword must label a concept within depth hops of a match
        (independent BFS over the raw parent/child/equivalent edges)."""
        depth = 1
        analyzed = analyzer.analyze("list the teaching staff in anna university")
        matches = match_concepts(
            analyzed.content_terms,
            [np.lemmas() for np in analyzed.noun_phrases],
            graph,
            base_forms=base_forms,
        )
        keywords = extract_domain_keywords(matches, graph, depth=depth)

        def neighbors(iri):
            concept = graph.concepts[iri]
            out = set(concept.parents) | set(concept.children) | set(concept.equivalents)
            return out

        reachable = set()
        for match in matches:
            frontier = {match.concept}
            seen = {match.concept}
            # equivalents are free hops; parents/children/siblings cost depth,
            # sibling = up one + down one, so allow depth + 1 raw-edge hops
            for _ in range(depth + 1 + len(graph.concepts)):
                nxt = set()
                for iri in frontier:
                    for other in graph.concepts[iri].equivalents:
                        if other not in seen:
                            nxt.add(other)
                if not nxt:
                    break
                seen |= nxt
                frontier |= nxt
            for _ in range(depth + 1):
                frontier = {n for iri in frontier for n in neighbors(iri)} | frontier
            reachable |= frontier
        labels = {label for iri in reachable for label in graph.concepts[iri].labels}
        label_tokens = {tok for label in labels for tok in label.split()}
        for keyword in keywords.keywords():
            assert keyword in labels or keyword in label_tokens
