"""Near-duplicate removal: URL normalization, shingles, survivor choice."""

from hypothesis import given, settings
from hypothesis import strategies as st

from factcheck.evidence.dedup import (
    deduplicate,
    doc_shingles,
    jaccard,
    normalize_url,
    registrable_domain,
    shingle_set,
)
from factcheck.types import SourceKind

from conftest import make_doc


def test_registrable_domain_heuristics():
    assert registrable_domain("https://news.example.com/path") == "example.com"
    assert registrable_domain("https://example.com/") == "example.com"
    assert registrable_domain("https://www.bbc.co.uk/news") == "bbc.co.uk"
    assert registrable_domain("https://docs.example.co.uk/x") == "example.co.uk"
    assert registrable_domain("https://blog.example.io/x") == "example.io"
    assert registrable_domain("https://user:pw@Host.Example.ORG:8080/x") == "example.org"
    assert registrable_domain("https://192.168.10.1/x") == "192.168.10.1"
    assert registrable_domain("https://localhost/x") == "localhost"
    assert registrable_domain("not a url") == ""


def test_normalize_url_drops_tracking_noise():
    assert (
        normalize_url("HTTPS://Example.COM/Path?utm_source=rss&q=1&fbclid=abc#frag")
        == "https://example.com/Path?q=1"
    )
    assert normalize_url("https://example.com/a") == normalize_url(
        "https://example.com/a?utm_campaign=x&gclid=2"
    )
    # Non-tracking params are significant.
    assert normalize_url("https://example.com/a?p=1") != normalize_url(
        "https://example.com/a?p=2"
    )


def test_shingle_set_normalizes_whitespace_and_case():
    assert shingle_set("The  Cat") == shingle_set("the cat")
    assert shingle_set("ab") == frozenset({"ab"})
    assert shingle_set("") == frozenset()
    assert jaccard(frozenset(), frozenset()) == 1.0


def test_url_duplicates_collapse_to_most_trusted():
    checked = make_doc(
        "https://factcheck.example.org/story",
        SourceKind.FACT_CHECK,
        content="The claim was reviewed in detail by the desk.",
    )
    syndicated = make_doc(
        "https://factcheck.example.org/story?utm_source=rss",
        SourceKind.WEB_SEARCH,
        content="A syndicated copy of the story from the wire.",
    )
    assert deduplicate([syndicated, checked]) == [checked]


LONG_BASE = (
    "Norway stretches far north of the polar circle and has one of the longest "
    "coastlines in the world, shaped by deep fjords, island chains, and steep "
    "glacial valleys that draw visitors through every season of the year."
)


def test_shingle_duplicates_prefer_longer_content():
    short = make_doc("https://a.example.com/1", content=LONG_BASE)
    longer = make_doc("https://b.example.org/2", content=LONG_BASE + " Extra tail.")
    assert doc_shingles(short) != doc_shingles(longer)
    assert deduplicate([short, longer]) == [longer]


def test_duplicate_clusters_are_transitive():
    a = make_doc("https://a.example.com/1", content=LONG_BASE)
    b = make_doc("https://a.example.com/1?utm_source=x", content=LONG_BASE + " Extra.")
    c = make_doc("https://c.example.net/3", content=LONG_BASE + " Extra.")
    # a~b by URL, b~c by shingles: one survivor for all three.
    assert len(deduplicate([a, b, c])) == 1


def test_distinct_docs_survive_in_original_order():
    docs = [
        make_doc("https://a.example.com/1", content="Glaciers carved the fjords."),
        make_doc("https://b.example.org/2", content="Tourism rebounded last spring."),
        make_doc("https://c.example.net/3", content="The museum reopened in March."),
    ]
    assert deduplicate(docs) == docs


def test_empty_and_single_lists_pass_through():
    assert deduplicate([]) == []
    doc = make_doc("https://a.example.com/1")
    assert deduplicate([doc]) == [doc]


_CONTENTS = [
    "Norway stretches far north of the polar circle and has long coasts.",
    "Norway stretches far north of the polar circle and has long coasts. Extra tail.",
    "The capital region grew quickly after the war years ended.",
    "Glacier melt reshaped every valley across the western ranges.",
    "A completely different story about museum opening hours downtown.",
]
_URLS = [
    "https://a.example.com/1",
    "https://a.example.com/1?utm_source=x",
    "https://b.example.org/2",
    "https://c.example.net/3",
    "https://d.example.io/4#frag",
]
_KINDS = [
    SourceKind.FACT_CHECK,
    SourceKind.ENCYCLOPEDIA,
    SourceKind.WEB_SEARCH,
    SourceKind.SCHOLARLY,
]


def random_doc(draw_url: int, draw_content: int, draw_kind: int):
    kind = _KINDS[draw_kind]
    return make_doc(
        _URLS[draw_url],
        kind,
        content=_CONTENTS[draw_content],
        citations=20 if kind is SourceKind.SCHOLARLY else None,
    )


doc_lists = st.lists(
    st.builds(
        random_doc,
        st.integers(0, len(_URLS) - 1),
        st.integers(0, len(_CONTENTS) - 1),
        st.integers(0, len(_KINDS) - 1),
    ),
    max_size=10,
)


@settings(max_examples=150)
@given(doc_lists)
def test_dedup_is_idempotent_and_duplicate_free(docs):
    once = deduplicate(docs)
    assert deduplicate(once) == once
    shingles = [doc_shingles(d) for d in once]
    urls = [normalize_url(d.url) for d in once]
    for i in range(len(once)):
        for j in range(i + 1, len(once)):
            assert urls[i] != urls[j]
            assert jaccard(shingles[i], shingles[j]) < 0.85
    # Survivors keep their relative input order.
    positions = [docs.index(d) for d in once]
    assert positions == sorted(positions)
