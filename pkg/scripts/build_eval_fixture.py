"""Generate the bundled English test dataset and its reference metrics.

The dataset is designed so the mock backends make a known number of
mistakes on each task, keeping the committed F1 values away from 0/1.
Expected predictions and the reference metrics are computed here with a
standalone reimplementation of the mock rules and a confusion-matrix
oracle, independent of the factcheck package.

Run from the repo root: python3 scripts/build_eval_fixture.py
"""

import json
import string
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATASET = ROOT / "src" / "factcheck" / "data" / "eval" / "en_test.tsv"
REFERENCE = ROOT / "tests" / "data" / "eval_reference.json"

NEGATION = {"not", "no", "never", "ikke", "inte", "nicht",
            "kein", "pas", "nie", "nunca", "нет", "不"}
PUNCT = string.punctuation + "«»„“”‘’¡¿…‹›"


# ---------------------------------------------------------------- oracle

def tokens(text: str) -> list[str]:
    out = []
    for raw in text.lower().split():
        tok = raw.strip(PUNCT)
        if tok:
            out.append(tok)
    return out


def predict_checkworthy(text: str) -> bool:
    if len(text.split()) < 3:
        return False
    if any(ch.isdigit() for ch in text):
        return True
    for token in text.split()[1:]:
        alpha = next((ch for ch in token if ch.isalpha()), None)
        if alpha is not None and alpha.isupper():
            return True
    return False


def predict_stance(claim: str, evidence: str) -> str:
    claim_tokens = set(tokens(claim))
    evidence_tokens = set(tokens(evidence))
    overlap = len(claim_tokens & evidence_tokens) / len(claim_tokens) if claim_tokens else 0.0
    if evidence_tokens & NEGATION and overlap >= 0.4:
        return "refutes"
    return "supports"


def predict_veracity(claim: str, evidence_texts: list[str]) -> bool:
    labels = [predict_stance(claim, ev) for ev in evidence_texts]
    supports = labels.count("supports")
    refutes = labels.count("refutes")
    assert supports != refutes, f"tied evidence not allowed in this fixture: {claim!r}"
    return supports > refutes


def f1_reference(gold: list, pred: list) -> tuple[float, float]:
    confusion: dict[tuple, int] = {}
    for g, p in zip(gold, pred):
        confusion[(g, p)] = confusion.get((g, p), 0) + 1
    per_class = []
    for cls in sorted(set(gold), key=str):
        tp = confusion.get((cls, cls), 0)
        fp = sum(v for (g, p), v in confusion.items() if p == cls and g != cls)
        fn = sum(v for (g, p), v in confusion.items() if g == cls and p != cls)
        denom = 2 * tp + fp + fn
        per_class.append(0.0 if denom == 0 else 2 * tp / denom)
    macro = sum(per_class) / len(per_class)
    correct = sum(confusion.get((cls, cls), 0) for cls in set(gold) | set(pred))
    wrong = len(gold) - correct
    micro = 2 * correct / (2 * correct + wrong + wrong)
    return macro, micro


# ---------------------------------------------------------------- content

def support_evidence(core: str) -> list[str]:
    return [
        f"Reference works state that {core}.",
        f"{core}, according to widely cited measurements.",
        f"Fact checkers rate the statement that {core} as accurate.",
    ]


def refute_evidence(core: str, extra_refute: bool = False) -> list[str]:
    out = [
        f"It is not true that {core}.",
        f"Careful reviews found no evidence that {core}.",
    ]
    if extra_refute:
        out.append(f"Experts call the idea that {core} a myth, not a fact.")
    else:
        out.append(f"Some older articles still claim that {core}.")
    return out


def core(text: str) -> str:
    return text.rstrip(".").rstrip()


# (text, veracity_gold, evidence kind) for the 38 check-worthy claims.
# kind: "support" = mock votes Supported, "refute" = Disputed, None = no
# evidence (record skipped by the veracity task).
CLAIMS: list[tuple[str, bool, str | None]] = [
    ("The Nile is about 6650 kilometers long.", True, "support"),
    ("Mount Everest rises 8849 meters above sea level.", True, "support"),
    ("Water boils at 100 degrees Celsius at sea level.", True, "support"),
    ("The Pacific Ocean covers about 165 million square kilometers.", True, "support"),
    ("Norway has a population of about 5.5 million people.", True, "support"),
    ("The Berlin Wall fell in 1989.", True, "support"),
    ("The human body has 206 bones in adulthood.", True, "support"),
    ("Light travels at about 300000 kilometers per second.", True, "support"),
    ("The Amazon discharges more water than any other river.", True, "support"),
    ("Oslo is the capital of Norway.", True, "support"),
    ("The Sahara is the largest hot desert on Earth.", True, "support"),
    ("Mercury is the closest planet to the Sun.", True, "support"),
    ("The Eiffel Tower stands in Paris.", True, "support"),
    ("Canberra is the capital of Australia.", True, "support"),
    ("The Moon orbits the Earth roughly once a month.", True, "support"),
    ("Photosynthesis uses 6 molecules of carbon dioxide per glucose.", True, "support"),
    # The next five are worded without digits or mid-sentence capitals,
    # so the mock detector misses them: designed false negatives.
    ("Bananas are berries in the botanical sense.", True, "support"),
    ("Octopuses have three hearts and blue blood.", True, "support"),
    ("Sound travels faster in water than in air.", True, "support"),
    ("Lightning can strike the same place twice.", True, "support"),
    ("Sharks existed before trees appeared on land.", True, "refute"),
    # True claims with mostly refuting fixture evidence: designed
    # veracity false negatives.
    ("The Eiffel Tower grows taller in summer heat.", True, "refute"),
    ("Hot water can freeze faster than cold water, called the Mpemba effect.", True, "refute"),
    ("Wombats in Australia produce cube shaped droppings.", True, "refute"),
    # No recorded evidence: the veracity task must skip these two.
    ("The Atlantic Ocean widens by a few centimeters each year.", True, None),
    ("The planet Venus rotates in the opposite direction to most planets.", True, None),
    # Popular misconceptions: veracity gold False.
    ("The Great Wall of China is visible from space with the naked eye.", False, "refute"),
    ("Humans use only 10 percent of their brains.", False, "refute"),
    ("Goldfish have a memory span of just 3 seconds.", False, "refute"),
    ("Emperor Napoleon was unusually short for his era.", False, "refute"),
    ("The Sahara was always a desert throughout history.", False, "refute"),
    ("Norse Vikings wore horned helmets into battle.", False, "refute"),
    ("Mount Everest is the tallest mountain measured from base to peak.", False, "refute"),
    ("Young Einstein failed mathematics in school.", False, "refute"),
    ("All bats in Europe are completely blind.", False, "refute"),
    # Misinformation that fixture pages repeat approvingly: the mock
    # votes Supported, a designed veracity false positive.
    ("The Great Pyramid was built by slave gangs of 100000 workers.", False, "support"),
    ("Lemmings in Norway throw themselves off cliffs in mass suicide.", False, "support"),
    ("A penny dropped from the Empire State Building can kill a pedestrian.", False, "support"),
]

# 62 sentences that are not check-worthy. The first seven carry digits
# or mid-sentence capitals, so the mock detector flags them anyway:
# designed false positives.
FILLERS: list[str] = [
    "I just adore the little cafes of Paris in spring!",
    "Honestly, Mondays should simply be illegal.",
    "My top 3 favorite movies are all masterpieces!",
    "Everyone should visit Italy at least once, trust me.",
    "Oh, how I miss the beaches of Rio!",
    "You simply must try the ramen at Ichiran!",
    "Thanks a million, Maria, you saved my week!",
    "What a gorgeous morning this turned out to be!",
    "Let's grab coffee sometime next week.",
    "Honestly, this soup tastes like heaven.",
    "Please remember to water the plants.",
    "How does anyone stay calm before a big exam?",
    "Wishing you all a restful weekend ahead.",
    "That movie left me speechless.",
    "Good luck with the move tomorrow!",
    "Sometimes a long walk fixes everything.",
    "Would you rather live by the sea or in the mountains?",
    "This playlist is pure joy from start to finish.",
    "Keep your chin up, better days are coming.",
    "What time should we meet for dinner?",
    "The sunset tonight looks absolutely magical.",
    "Hang in there, exams will be over soon.",
    "Such a cozy little bookshop!",
    "Remember to stretch before your run.",
    "Everyone deserves a second chance.",
    "Coffee first, questions later.",
    "How wonderful to see the garden blooming again!",
    "Stay hydrated out there, folks.",
    "My heart melts every time the puppy sneezes.",
    "Cheers to new beginnings!",
    "Could someone please explain this meme to me?",
    "Nothing beats fresh bread on a rainy afternoon.",
    "Try to be kind, even on hard days.",
    "What a match that was last night!",
    "Here's hoping the trains run on time for once.",
    "So proud of this little team.",
    "Do you ever just stare at the ceiling and think?",
    "Truly the best sandwich ever, hands down.",
    "May all your deadlines be gentle this month.",
    "Ugh, traffic again, of course.",
    "Send good vibes for my interview, please!",
    "A quiet evening with tea sounds perfect.",
    "Who else loves the smell of old books?",
    "Take breaks, your eyes will thank you.",
    "Dream big and nap often.",
    "This weather calls for pancakes.",
    "Hope the little one feels better soon!",
    "What should we name the new kitten?",
    "Grateful for slow mornings and good friends.",
    "Just finished the puzzle, feeling unstoppable!",
    "Does pineapple belong on pizza or is that madness?",
    "Another monday, another chance to start fresh.",
    "Reading by candlelight feels like time travel.",
    "Somebody bring snacks to the meeting, please.",
    "The queue at the bakery moved so slowly today.",
    "Off to the lake for the weekend, wish us sun!",
    "Every garden tells a story.",
    "So lovely!",
    "What luck!",
    "Absolutely unreal!",
    "Miss you loads.",
    "Pure magic.",
]

EXPECTED_DETECTION_FN = 5
EXPECTED_DETECTION_FP = 7
EXPECTED_VERACITY_FN = 4
EXPECTED_VERACITY_FP = 3
EXPECTED_SKIPPED = 2


def build_records() -> list[dict]:
    records = []
    extra_toggle = False
    for text, veracity_gold, kind in CLAIMS:
        if kind == "support":
            evidence = support_evidence(core(text))
        elif kind == "refute":
            evidence = refute_evidence(core(text), extra_refute=extra_toggle)
            extra_toggle = not extra_toggle
        else:
            evidence = []
        records.append(
            {"text": text, "checkworthy": True, "veracity": veracity_gold,
             "evidence": evidence}
        )
    for text in FILLERS:
        records.append({"text": text, "checkworthy": False, "veracity": None, "evidence": []})
    return records


def validate(records: list[dict]) -> tuple[list, list, list, list]:
    assert len(records) == 100, len(records)
    assert sum(r["checkworthy"] for r in records) == 38
    assert sum(1 for r in records if r["veracity"] is True) == 26
    assert sum(1 for r in records if r["veracity"] is False) == 12
    texts = [r["text"] for r in records]
    assert len(set(texts)) == len(texts), "duplicate record text"
    for r in records:
        for field in [r["text"]] + r["evidence"]:
            assert "\t" not in field and "\n" not in field, field

    det_gold, det_pred = [], []
    for r in records:
        det_gold.append(r["checkworthy"])
        det_pred.append(predict_checkworthy(r["text"]))
    fn = sum(1 for g, p in zip(det_gold, det_pred) if g and not p)
    fp = sum(1 for g, p in zip(det_gold, det_pred) if not g and p)
    assert fn == EXPECTED_DETECTION_FN, f"detection FN {fn}"
    assert fp == EXPECTED_DETECTION_FP, f"detection FP {fp}"

    ver_gold, ver_pred = [], []
    skipped = 0
    for r in records:
        if r["veracity"] is None:
            continue
        if not r["evidence"]:
            skipped += 1
            continue
        ver_gold.append(r["veracity"])
        ver_pred.append(predict_veracity(r["text"], r["evidence"]))
    assert skipped == EXPECTED_SKIPPED, f"skipped {skipped}"
    fn = sum(1 for g, p in zip(ver_gold, ver_pred) if g and not p)
    fp = sum(1 for g, p in zip(ver_gold, ver_pred) if not g and p)
    assert fn == EXPECTED_VERACITY_FN, f"veracity FN {fn}"
    assert fp == EXPECTED_VERACITY_FP, f"veracity FP {fp}"
    assert len(ver_gold) == 36, len(ver_gold)
    return det_gold, det_pred, ver_gold, ver_pred


def write_dataset(records: list[dict]) -> None:
    lines = ["\t".join(["text", "language", "split", "checkworthy", "veracity", "evidence"])]
    for r in records:
        veracity = "" if r["veracity"] is None else str(r["veracity"]).lower()
        evidence = json.dumps(r["evidence"]) if r["evidence"] else ""
        lines.append(
            "\t".join([r["text"], "en", "test", str(r["checkworthy"]).lower(),
                       veracity, evidence])
        )
    DATASET.parent.mkdir(parents=True, exist_ok=True)
    DATASET.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_reference(det, ver) -> None:
    det_macro, det_micro = f1_reference(*det)
    ver_macro, ver_micro = f1_reference(*ver)
    payload = {
        "claims": [{"language": "en", "task": "ClaimDetection",
                    "macro_f1": det_macro, "micro_f1": det_micro, "n": len(det[0])}],
        "veracity": [{"language": "en", "task": "Veracity",
                      "macro_f1": ver_macro, "micro_f1": ver_micro, "n": len(ver[0])}],
    }
    REFERENCE.parent.mkdir(parents=True, exist_ok=True)
    REFERENCE.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"claims    macro={det_macro:.6f} micro={det_micro:.6f} n={len(det[0])}")
    print(f"veracity  macro={ver_macro:.6f} micro={ver_micro:.6f} n={len(ver[0])}")


def main() -> None:
    records = build_records()
    det_gold, det_pred, ver_gold, ver_pred = validate(records)
    write_dataset(records)
    write_reference((det_gold, det_pred), (ver_gold, ver_pred))
    print(f"wrote {DATASET.relative_to(ROOT)} and {REFERENCE.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
