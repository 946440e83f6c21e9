"""Generate the golden articles, replay search fixtures, and manifests.

Expected claim detection, stance votes, verdict labels, justifications,
fixes, and snippet ordering are all recomputed here with inline
reimplementations of the deterministic rules. The pipeline then runs
once and every field of its payload is checked against those
expectations before the manifest is frozen. Any drift between the
design, the rules, and the pipeline fails loudly.

Run from the repo root: python3 scripts/build_golden_fixtures.py
"""

import hashlib
import json
import math
import shutil
import string
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SEARCH_DIR = ROOT / "tests" / "data" / "search"
SET_A_DIR = ROOT / "tests" / "data" / "search_set_a"
GOLDEN_DIR = ROOT / "tests" / "data" / "golden"

NEGATION = {"not", "no", "never", "ikke", "inte", "nicht",
            "kein", "pas", "nie", "nunca", "нет", "不"}
PUNCT = string.punctuation + "«»„“”‘’¡¿…‹›"
TEMPLATE = "Based on {n} evidence snippets, the claim appears {label}. Top source: {domain}."


# ------------------------------------------------- inline rule replicas

def tokens(text: str) -> list[str]:
    out = []
    for raw in text.lower().split():
        tok = raw.strip(PUNCT)
        if tok:
            out.append(tok)
    return out


def is_checkworthy(text: str) -> bool:
    if len(text.split()) < 3:
        return False
    if any(ch.isdigit() for ch in text):
        return True
    for token in text.split()[1:]:
        alpha = next((ch for ch in token if ch.isalpha()), None)
        if alpha is not None and alpha.isupper():
            return True
    return False


def stance(claim_text: str, snippet_text: str) -> tuple[str, float]:
    claim_tokens = set(tokens(claim_text))
    snippet_tokens = set(tokens(snippet_text))
    overlap = len(claim_tokens & snippet_tokens) / len(claim_tokens) if claim_tokens else 0.0
    if snippet_tokens & NEGATION and overlap >= 0.4:
        return "Refutes", overlap
    return "Supports", max(overlap, 0.5)


def embed(text: str) -> list[float]:
    counts = [0.0] * 64
    grams = [text] if len(text) < 3 else [text[i:i + 3] for i in range(len(text) - 2)]
    for gram in grams:
        digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
        counts[int.from_bytes(digest, "big") % 64] += 1.0
    norm = math.sqrt(math.fsum(c * c for c in counts))
    return [c / norm for c in counts]


def cosine(a: list[float], b: list[float]) -> float:
    norm_a = math.sqrt(math.fsum(v * v for v in a))
    norm_b = math.sqrt(math.fsum(v * v for v in b))
    dot = math.fsum(x * y for x, y in zip(a, b))
    return max(-1.0, min(1.0, dot / (norm_a * norm_b)))


def shingles(text: str) -> frozenset[str]:
    normalized = " ".join(text.split()).lower()
    if len(normalized) < 3:
        return frozenset({normalized} if normalized else ())
    return frozenset(normalized[i:i + 3] for i in range(len(normalized) - 2))


def fixture_key(query: str, language: str) -> str:
    raw = f"{' '.join(query.split()).lower()}|{language}"
    return hashlib.sha256(raw.encode("utf-8")).hexdigest()


# ------------------------------------------------------------- articles
# Each article is a sentence list; claims are the check-worthy ones.
# Per claim: the queries the pipeline will derive, the replay docs each
# (adapter, query) pair serves, and the expected verdict.

A1_SENTENCES = [
    "Mange nordmenn elsker å gå på tur i fjellet.",
    "Hovedstaden i Norge heter Oslo.",
    "Landet er kjent for vakker natur og dype fjorder.",
    "Norge har et landareal på 250 000 km2 og cirka 10 millioner innbyggere.",
    "Myndighetene håper flere velger å feriere hjemme.",
    "Sognefjorden er over 200 kilometer lang.",
    "Det er lett å forstå hvorfor turistene kommer tilbake.",
    "Turistnæringen omsatte for 150 milliarder kroner i fjor.",
    "Reiselivet betyr mye for mange små kystsamfunn.",
    "Fremtiden ser lys ut for norsk turisme.",
]

A2_SENTENCES = [
    "A new report looks at how people move around the world.",
    "Norway has a population of 10 million people.",
    "Many residents enjoy the long summer evenings.",
    "The capital city is called Oslo.",
    "Tourism keeps growing along the coast.",
    "Officials expect the trend to continue next season.",
]

# Sentence two may not end in a word like "Sun": "sun." is on the
# English abbreviation list, so the segmenter would refuse to split.
A3_SENTENCES = [
    "Some facts about the solar system still amaze people.",
    "Mercury orbits the Sun faster than any other planet.",
    "Stargazing remains a beloved pastime everywhere.",
    "Clear skies make all the difference.",
]

MERCURY_BLOCK = (
    "Mercury orbits the Sun faster than any other planet. "
    "It completes a trip around in roughly 88 days. "
    "Daytime temperatures soar above 400 degrees Celsius. "
    "The planet has almost no atmosphere to trap heat. "
    "Nights are therefore brutally cold. "
    "A year there passes faster than a single season here. "
    "Astronomers have mapped most of the surface in detail."
)

MERCURY_WINDOWS = [
    "Mercury orbits the Sun faster than any other planet. It completes a trip "
    "around in roughly 88 days. Daytime temperatures soar above 400 degrees Celsius.",
    "The planet has almost no atmosphere to trap heat. Nights are therefore "
    "brutally cold. A year there passes faster than a single season here.",
    "Astronomers have mapped most of the surface in detail.",
]

# (adapter, query, language) -> recorded results. A missing combination
# means that adapter has nothing for that query.
FIXTURES: dict[tuple[str, str, str], list[dict]] = {
    ("factsearch", "Hovedstaden i Norge heter Oslo.", "no"): [
        {
            "url": "https://faktisk.no/artikler/oslo-hovedstad",
            "title": "Oslo er Norges hovedstad",
            "source_kind": "FactCheck",
            "content": "Hovedstaden i Norge heter Oslo.\n\nByen ligger innerst i "
                       "Oslofjorden og har vært hovedstad siden 1814.",
        },
    ],
    ("websearch", "Hovedstaden i Norge heter Oslo.", "no"): [
        {
            "url": "https://no.wikipedia.org/wiki/Oslo",
            "title": "Oslo",
            "source_kind": "Encyclopedia",
            "content": "Oslo er hovedstaden i Norge og landets største by.\n\n"
                       "Kommunen fikk sitt navn i gammelnorsk tid.",
        },
    ],
    ("factsearch", "Norge har et landareal på 250 000 km2 og cirka 10 millioner innbyggere.", "no"): [
        {
            "url": "https://faktisk.no/artikler/norge-areal-befolkning",
            "title": "Nei, tallene om Norge stemmer ikke",
            "source_kind": "FactCheck",
            "content": "Norge har ikke et landareal på 250 000 km2, og landet har "
                       "ikke 10 millioner innbyggere.\n\nLandarealet er ikke "
                       "250 000 km2, men cirka 385 000 km2, og folketallet er "
                       "cirka 5.5 millioner.",
        },
    ],
    ("websearch", "Norge har et landareal på 250 000 km2 og cirka 10 millioner innbyggere.", "no"): [
        {
            "url": "https://no.wikipedia.org/wiki/Norge",
            "title": "Norge",
            "source_kind": "Encyclopedia",
            "content": "Norge har ikke 10 millioner innbyggere; folketallet "
                       "passerte 5.5 millioner, og landarealet er cirka "
                       "385 000 km2, ikke 250 000 km2.",
        },
    ],
    ("websearch", "Sognefjorden over 200 kilometer lang", "no"): [
        {
            "url": "https://snl.no/Sognefjorden",
            "title": "Sognefjorden",
            "source_kind": "Encyclopedia",
            "content": "Sognefjorden er over 200 kilometer lang.\n\nFjorden "
                       "strekker seg fra kysten ved Solund inn til Skjolden.",
        },
    ],
    ("factsearch", "Norway has a population of 10 million people.", "en"): [
        {
            "url": "https://factcheck.example.org/norway-population",
            "title": "Norway population claim is wrong",
            "source_kind": "FactCheck",
            "content": "Norway does not have 10 million people; the population "
                       "is about 5.5 million.",
        },
        {
            "url": "https://journal.example.edu/demography-paper",
            "title": "Scandinavian demography survey",
            "source_kind": "Scholarly",
            "citation_count": 3,
            "content": "A survey of Nordic population trends.",
        },
    ],
    ("websearch", "Norway has a population of 10 million people.", "en"): [
        {
            "url": "https://stats.example.no/population?utm_source=feed",
            "title": "Population of Norway",
            "source_kind": "WebSearch",
            "content": "Norway has a population of 5.5 million people, "
                       "not 10 million.",
        },
        {
            "url": "https://factcheck.example.org/norway-population?utm_source=rss",
            "title": "Norway population claim is wrong (syndicated)",
            "source_kind": "WebSearch",
            "content": "A syndicated copy of the population fact check.",
        },
    ],
    ("websearch", "The capital city is called Oslo.", "en"): [
        {
            "url": "https://en.wikipedia.org/wiki/Oslo",
            "title": "Oslo",
            "source_kind": "Encyclopedia",
            "content": "The capital city is called Oslo.\n\nIt lies at the head "
                       "of the Oslofjord in the southeast of the country.",
        },
    ],
    ("websearch", "Mercury orbits the Sun faster than any other planet.", "en"): [
        {
            "url": "https://astro.example.com/mercury",
            "title": "Mercury facts",
            "source_kind": "WebSearch",
            "content": MERCURY_BLOCK,
        },
    ],
}

# Expected evidence per claim after filtering and dedup, in document
# order: (url, domain, [paragraph texts]).
A1_C1_DOCS = [
    ("https://faktisk.no/artikler/oslo-hovedstad", "faktisk.no", [
        "Hovedstaden i Norge heter Oslo.",
        "Byen ligger innerst i Oslofjorden og har vært hovedstad siden 1814.",
    ]),
    ("https://no.wikipedia.org/wiki/Oslo", "wikipedia.org", [
        "Oslo er hovedstaden i Norge og landets største by.",
        "Kommunen fikk sitt navn i gammelnorsk tid.",
    ]),
]
A1_C2_DOCS = [
    ("https://faktisk.no/artikler/norge-areal-befolkning", "faktisk.no", [
        "Norge har ikke et landareal på 250 000 km2, og landet har ikke "
        "10 millioner innbyggere.",
        "Landarealet er ikke 250 000 km2, men cirka 385 000 km2, og "
        "folketallet er cirka 5.5 millioner.",
    ]),
    ("https://no.wikipedia.org/wiki/Norge", "wikipedia.org", [
        "Norge har ikke 10 millioner innbyggere; folketallet passerte "
        "5.5 millioner, og landarealet er cirka 385 000 km2, ikke 250 000 km2.",
    ]),
]
A1_C3_DOCS = [
    ("https://snl.no/Sognefjorden", "snl.no", [
        "Sognefjorden er over 200 kilometer lang.",
        "Fjorden strekker seg fra kysten ved Solund inn til Skjolden.",
    ]),
]
A2_C1_DOCS = [
    ("https://factcheck.example.org/norway-population", "example.org", [
        "Norway does not have 10 million people; the population is about 5.5 million.",
    ]),
    ("https://stats.example.no/population?utm_source=feed", "example.no", [
        "Norway has a population of 5.5 million people, not 10 million.",
    ]),
]
A2_C2_DOCS = [
    ("https://en.wikipedia.org/wiki/Oslo", "wikipedia.org", [
        "The capital city is called Oslo.",
        "It lies at the head of the Oslofjord in the southeast of the country.",
    ]),
]
A3_C1_DOCS = [
    ("https://astro.example.com/mercury", "example.com", MERCURY_WINDOWS),
]

NORWAY_FIX = {
    "corrected_text": "Norge har et landareal på 385 000 km2 og cirka "
                      "5.5 millioner innbyggere.",
    "edits": [
        {"start": 26, "end": 33, "replacement": "385 000"},
        {"start": 47, "end": 49, "replacement": "5.5"},
    ],
}
A2_FIX = {
    "corrected_text": "Norway has a population of 5.5 million people.",
    "edits": [{"start": 27, "end": 29, "replacement": "5.5"}],
}

ARTICLES = [
    {
        "name": "article1",
        "sentences": A1_SENTENCES,
        "language_param": "no",
        "language": "no",
        "claims": [
            {"sentence": A1_SENTENCES[1], "label": "Supported", "docs": A1_C1_DOCS, "fix": None},
            {"sentence": A1_SENTENCES[3], "label": "Disputed", "docs": A1_C2_DOCS,
             "fix": NORWAY_FIX},
            {"sentence": A1_SENTENCES[5], "label": "Supported", "docs": A1_C3_DOCS, "fix": None},
            {"sentence": A1_SENTENCES[7], "label": "Unverifiable", "docs": [], "fix": None},
        ],
    },
    {
        "name": "article2",
        "sentences": A2_SENTENCES,
        "language_param": None,
        "language": "en",
        "claims": [
            {"sentence": A2_SENTENCES[1], "label": "Disputed", "docs": A2_C1_DOCS, "fix": A2_FIX},
            {"sentence": A2_SENTENCES[3], "label": "Supported", "docs": A2_C2_DOCS, "fix": None},
        ],
    },
    {
        "name": "article3",
        "sentences": A3_SENTENCES,
        "language_param": None,
        "language": "en",
        "claims": [
            {"sentence": A3_SENTENCES[1], "label": "Supported", "docs": A3_C1_DOCS, "fix": None},
        ],
    },
]

SET_A_QUERY = "solar panel efficiency records"
SET_A = {
    "alpha": [
        {"url": "https://alpha.example.com/articles/panel-record", "domain": "example.com",
         "title": "New solar panel record", "source_kind": "WebSearch",
         "content": "A lab cell hit a new efficiency record this spring."},
        {"url": "https://news.example.net/energy/cells", "domain": "example.net",
         "title": "Efficiency milestones", "source_kind": "WebSearch",
         "content": "Research teams keep pushing cell efficiency higher."},
    ],
    "beta": [
        {"url": "https://encyclo.example.org/wiki/Solar_cell", "domain": "example.org",
         "title": "Solar cell", "source_kind": "Encyclopedia",
         "content": "A solar cell converts sunlight into electricity."},
        {"url": "https://factwatch.example.org/claims/panel-myth", "domain": "example.org",
         "title": "Panel efficiency claim reviewed", "source_kind": "FactCheck",
         "content": "The viral efficiency claim overstates lab results."},
        {"url": "https://journal.example.edu/articles/pv-limits", "domain": "example.edu",
         "title": "Limits of photovoltaic conversion", "source_kind": "Scholarly",
         "citation_count": 25,
         "content": "Theoretical limits constrain single junction cells."},
    ],
    "gamma": [
        {"url": "https://blog.example.io/posts/rooftop", "domain": "example.io",
         "title": "Rooftop setups", "source_kind": "WebSearch",
         "content": "Rooftop systems rarely reach laboratory numbers."},
        {"url": "https://docs.example.co.uk/solar/guide", "domain": "example.co.uk",
         "title": "Solar guide", "source_kind": "WebSearch",
         "content": "A practical guide to sizing home solar arrays."},
    ],
}


# -------------------------------------------------------- audit helpers

def article_text(sentences: list[str]) -> str:
    return " ".join(sentences)


def expected_claims(article: dict) -> list[dict]:
    """Claim entries recomputed from the inline rules, not the package."""
    text = article_text(article["sentences"])
    designs = list(article["claims"])
    claims = []
    offset = 0
    for sentence in article["sentences"]:
        start = text.index(sentence, offset)
        end = start + len(sentence)
        offset = end
        if not is_checkworthy(sentence):
            continue
        design = designs.pop(0)
        assert design["sentence"] == sentence, (design["sentence"], sentence)
        claims.append(expected_claim_entry(design, sentence, start, end, len(claims) + 1))
    assert not designs, f"designed claims not detected: {[d['sentence'] for d in designs]}"
    return claims


def expected_claim_entry(design: dict, sentence: str, start: int, end: int, num: int) -> dict:
    # Snippet order replicates the pipeline sort: per doc top-3 by
    # (-similarity, paragraph_index), then global (-similarity,
    # doc_index, paragraph_index).
    claim_vec = embed(sentence)
    candidates = []
    for doc_index, (url, domain, paragraphs) in enumerate(design["docs"]):
        sims = [cosine(claim_vec, embed(p)) for p in paragraphs]
        order = sorted(range(len(paragraphs)), key=lambda i: (-sims[i], i))[:3]
        for p_index in order:
            candidates.append((sims[p_index], doc_index, p_index, url, domain,
                               paragraphs[p_index]))
    candidates.sort(key=lambda c: (-c[0], c[1], c[2]))
    candidates = candidates[:10]

    evidence = []
    supports = refutes = 0
    for sim, doc_index, p_index, url, domain, paragraph in candidates:
        label, _ = stance(sentence, paragraph)
        supports += label == "Supports"
        refutes += label == "Refutes"
        title = next(
            r["title"]
            for results in FIXTURES.values()
            for r in results
            if r["url"].split("?")[0] == url.split("?")[0]
        )
        evidence.append({"url": url, "title": title, "snippet": paragraph,
                         "similarity": sim, "stance": label})

    if not candidates:
        label, justification = "Unverifiable", "No evidence found."
    else:
        label = "Supported" if supports > refutes else "Disputed"
        assert supports != refutes, f"tied design for {sentence!r}"
        justification = TEMPLATE.format(n=len(candidates), label=label,
                                        domain=candidates[0][4])
    assert label == design["label"], (sentence, label, design["label"])

    fix = design["fix"]
    if fix is not None:
        patched = sentence
        for edit in sorted(fix["edits"], key=lambda e: e["start"], reverse=True):
            patched = patched[:edit["start"]] + edit["replacement"] + patched[edit["end"]:]
        assert patched == fix["corrected_text"], (patched, fix["corrected_text"])

    return {
        "id": f"c{num}",
        "start": start,
        "end": end,
        "text": sentence,
        "status": "Verified",
        "label": label,
        "supports": supports,
        "refutes": refutes,
        "justification": justification,
        "fix": fix,
        "evidence": evidence,
    }


def audit_dedup_safety() -> None:
    """Docs that must both survive may not look like near-duplicates."""
    for docs in [A1_C1_DOCS, A1_C2_DOCS, A2_C1_DOCS]:
        sets = [shingles(title_of(url) + " " + "\n\n".join(paragraphs)[:500])
                for url, _, paragraphs in docs]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                union = len(sets[i] | sets[j])
                score = len(sets[i] & sets[j]) / union if union else 1.0
                assert score < 0.80, f"dedup margin too thin: {score:.3f}"


def title_of(url: str) -> str:
    for results in FIXTURES.values():
        for r in results:
            if r["url"] == url:
                return r["title"]
    raise KeyError(url)


# ------------------------------------------------------------ fixtures

def write_search_fixtures() -> None:
    if SEARCH_DIR.exists():
        shutil.rmtree(SEARCH_DIR)
    for (adapter, query, language), results in FIXTURES.items():
        path = SEARCH_DIR / adapter / f"{fixture_key(query, language)}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"query": query, "language": language, "results": results}
        path.write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n",
                        encoding="utf-8")
    # Both adapter directories must exist even if one has no files.
    for adapter in ("factsearch", "websearch"):
        (SEARCH_DIR / adapter).mkdir(exist_ok=True)


def write_set_a() -> None:
    if SET_A_DIR.exists():
        shutil.rmtree(SET_A_DIR)
    manifest = []
    for adapter in sorted(SET_A):
        results = SET_A[adapter]
        path = SET_A_DIR / adapter / f"{fixture_key(SET_A_QUERY, 'en')}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        recorded = [{k: v for k, v in r.items() if k != "domain"} for r in results]
        path.write_text(
            json.dumps({"query": SET_A_QUERY, "language": "en", "results": recorded},
                       ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        for r in results:
            manifest.append({
                "url": r["url"],
                "domain": r["domain"],
                "title": r["title"],
                "content": r["content"],
                "source_kind": r["source_kind"],
                "language": "en",
                "retrieved_at": "2000-01-01T00:00:00+00:00",
                "citation_count": r.get("citation_count"),
            })
    assert len(manifest) == 7
    (GOLDEN_DIR / "set_a_manifest.json").write_text(
        json.dumps({"query": SET_A_QUERY, "language": "en", "docs": manifest},
                   ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )


# ------------------------------------------------- pipeline cross-check

def run_pipeline(article: dict) -> dict:
    from factcheck.evidence.adapters import replay_adapters
    from factcheck.gateway.config import mock_backends
    from factcheck.pipeline import FactcheckPipeline
    from factcheck.service.language import detect_language
    from factcheck.service.wire import job_payload
    from factcheck.types import Job, JobStatus

    from datetime import datetime, timezone

    text = article_text(article["sentences"])
    language = article["language_param"] or detect_language(text)
    assert language == article["language"], (language, article["language"])

    pipeline = FactcheckPipeline(
        backends=mock_backends(), adapters=replay_adapters(SEARCH_DIR)
    )
    now = datetime(2000, 1, 1, tzinfo=timezone.utc)
    job = Job(id="golden", article_text=text, language=language,
              status=JobStatus.RUNNING, created_at=now, updated_at=now)
    job.reports = pipeline.check_article(
        text, language, article_id="golden",
        on_claims=lambda claims: job.claims.extend(claims),
    )
    job.status = JobStatus.DONE
    return job_payload(job)


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    write_search_fixtures()
    write_set_a()
    audit_dedup_safety()

    for article in ARTICLES:
        expected = {
            "status": "Done",
            "language": article["language"],
            "claims": expected_claims(article),
        }
        payload = run_pipeline(article)
        payload2 = run_pipeline(article)
        canonical = json.dumps(payload, sort_keys=True, ensure_ascii=False)
        assert canonical == json.dumps(payload2, sort_keys=True, ensure_ascii=False)
        if payload != expected:
            exp = json.dumps(expected, indent=2, ensure_ascii=False)
            got = json.dumps(payload, indent=2, ensure_ascii=False)
            raise AssertionError(
                f"{article['name']}: pipeline disagrees with the audit\n"
                f"--- expected ---\n{exp}\n--- pipeline ---\n{got}"
            )

        text = article_text(article["sentences"])
        (GOLDEN_DIR / f"{article['name']}.txt").write_text(text, encoding="utf-8")
        manifest = {"language_param": article["language_param"], "payload": payload}
        (GOLDEN_DIR / f"{article['name']}.json").write_text(
            json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
        labels = [c["label"] for c in payload["claims"]]
        print(f"{article['name']}: {len(payload['claims'])} claims {labels}")
    print(f"fixtures under {SEARCH_DIR.relative_to(ROOT)}, "
          f"manifests under {GOLDEN_DIR.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
