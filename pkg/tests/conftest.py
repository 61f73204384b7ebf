import pytest

from ontosearch.config import bundled_data_dir, load_config
from ontosearch.engine import SearchEngine
from ontosearch.ontology import parse_turtle
from ontosearch.textanalysis import Analyzer, TagLexicon, load_stoplist
from ontosearch.wordnet import load_wordnet


@pytest.fixture(scope="session")
def data_dir():
    return bundled_data_dir()


@pytest.fixture(scope="session")
def tag_lexicon(data_dir):
    return TagLexicon.load(data_dir / "tags.lex")


@pytest.fixture(scope="session")
def stoplist(data_dir):
    return load_stoplist(data_dir / "stopwords.txt")


@pytest.fixture(scope="session")
def lexicon(data_dir):
    return load_wordnet(data_dir / "wordnet")


@pytest.fixture(scope="session")
def graph(data_dir):
    return parse_turtle((data_dir / "university.ttl").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def analyzer(tag_lexicon, stoplist, graph):
    return Analyzer(tag_lexicon, stoplist, individual_labels=graph.individual_labels())


@pytest.fixture(scope="session")
def engine():
    return SearchEngine(load_config(None))


@pytest.fixture(scope="session")
def base_forms(lexicon):
    def variants(term):
        out = []
        for pos in ("noun", "verb"):
            for form in lexicon.base_forms(term, pos):
                spaced = form.replace("_", " ")
                if spaced not in out:
                    out.append(spaced)
        return out

    return variants
