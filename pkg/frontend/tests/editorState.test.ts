import { describe, expect, it } from "vitest";

import { EditorState, colorForLabel } from "../src/editorState.js";
import { articleText, clonePayload, manifest } from "./fixture.js";

function checkedState(): EditorState {
  const state = new EditorState(articleText);
  state.beginCheck();
  state.syncFromPayload(clonePayload());
  return state;
}

describe("colorForLabel", () => {
  it("maps labels to decoration colors", () => {
    expect(colorForLabel("Disputed")).toBe("red");
    expect(colorForLabel("Supported")).toBe("green");
    expect(colorForLabel("Unverifiable")).toBe("gray");
    expect(colorForLabel(null)).toBe("gray");
  });
});

describe("syncFromPayload", () => {
  it("renders the golden article as 4 decorations with manifest colors", () => {
    const state = checkedState();
    expect(state.decorations).toHaveLength(4);
    expect(state.decorations.map((d) => d.color)).toEqual([
      "green",
      "red",
      "green",
      "gray",
    ]);
    for (const decoration of state.decorations) {
      expect(state.text.slice(decoration.start, decoration.end)).toBe(
        decoration.claim.text,
      );
    }
  });

  it("keeps one decoration per claim across repeated polls", () => {
    const state = checkedState();
    state.syncFromPayload(clonePayload());
    expect(state.decorations).toHaveLength(4);
  });

  it("upgrades colors as later polls fill in labels", () => {
    const state = new EditorState(articleText);
    state.beginCheck();
    const inflight = clonePayload();
    for (const claim of inflight.claims) {
      claim.status = "Verifying";
      claim.label = null;
      claim.supports = 0;
      claim.refutes = 0;
      claim.justification = null;
      claim.fix = null;
      claim.evidence = [];
    }
    state.syncFromPayload(inflight);
    expect(state.decorations.map((d) => d.color)).toEqual([
      "gray",
      "gray",
      "gray",
      "gray",
    ]);
    state.syncFromPayload(clonePayload());
    expect(state.decorations.map((d) => d.color)).toEqual([
      "green",
      "red",
      "green",
      "gray",
    ]);
  });

  it("maps claim offsets through edits typed while the check ran", () => {
    const state = new EditorState(articleText);
    state.beginCheck();
    state.replaceRange(0, 0, "UTKAST: ");
    state.syncFromPayload(clonePayload());
    for (const decoration of state.decorations) {
      expect(state.text.slice(decoration.start, decoration.end)).toBe(
        decoration.claim.text,
      );
    }
  });

  it("never lets decorations overlap or escape the document", () => {
    const state = checkedState();
    state.replaceRange(0, 5, "");
    state.replaceRange(10, 10, "ekstra ord ");
    const ordered = [...state.decorations].sort((a, b) => a.start - b.start);
    for (let i = 0; i < ordered.length; i++) {
      const d = ordered[i]!;
      expect(d.start).toBeGreaterThanOrEqual(0);
      expect(d.end).toBeLessThanOrEqual(state.text.length);
      expect(d.start).toBeLessThan(d.end);
      if (i > 0) expect(d.start).toBeGreaterThanOrEqual(ordered[i - 1]!.end);
    }
  });
});

describe("replaceRange decoration tracking", () => {
  it("shifts ranges for edits before them and ignores edits after", () => {
    const state = checkedState();
    const second = state.decorations[1]!;
    const before = { start: second.start, end: second.end };

    state.replaceRange(0, 0, "12345");
    expect(second.start).toBe(before.start + 5);
    expect(second.end).toBe(before.end + 5);

    state.replaceRange(state.text.length, state.text.length, " Slutt.");
    expect(second.start).toBe(before.start + 5);
    expect(second.end).toBe(before.end + 5);
  });

  it("grows a range for an insertion inside it", () => {
    const state = checkedState();
    const second = state.decorations[1]!;
    const length = second.end - second.start;
    state.replaceRange(second.start + 6, second.start + 6, "xx");
    expect(second.end - second.start).toBe(length + 2);
  });

  it("drops a decoration whose text is deleted entirely", () => {
    const state = checkedState();
    const second = state.decorations[1]!;
    state.replaceRange(second.start, second.end, "");
    expect(state.decoration("c2")).toBeUndefined();
    expect(state.decorations).toHaveLength(3);
  });

  it("clamps a deletion straddling a range boundary", () => {
    const state = checkedState();
    const second = state.decorations[1]!;
    const oldStart = second.start;
    state.replaceRange(oldStart - 3, oldStart + 4, "");
    expect(second.start).toBe(oldStart - 3);
    expect(second.start).toBeLessThan(second.end);
    expect(state.text.slice(second.start, second.end)).toBe(
      second.claim.text.slice(4),
    );
  });

  it("rejects out-of-bounds edits", () => {
    const state = new EditorState("abc");
    expect(() => state.replaceRange(-1, 2, "x")).toThrow(RangeError);
    expect(() => state.replaceRange(0, 4, "x")).toThrow(RangeError);
    expect(() => state.replaceRange(2, 1, "x")).toThrow(RangeError);
  });
});

describe("applyFix", () => {
  it("rewrites the claim range to exactly the corrected text", () => {
    const state = checkedState();
    const fix = manifest.payload.claims[1]!.fix!;

    const outcome = state.applyFix("c2");
    expect(outcome).toEqual({ applied: true });
    expect(state.currentTextOf("c2")).toBe(fix.corrected_text);
    expect(state.text).toBe(
      articleText.replace(manifest.payload.claims[1]!.text, fix.corrected_text),
    );

    const decoration = state.decoration("c2")!;
    expect(decoration.color).toBe("gray");
    expect(decoration.pendingRecheck).toBe(true);
  });

  it("still applies after unrelated edits earlier in the document", () => {
    const state = checkedState();
    state.replaceRange(0, 0, "Innledning. ");
    expect(state.applyFix("c2")).toEqual({ applied: true });
    expect(state.currentTextOf("c2")).toBe(
      manifest.payload.claims[1]!.fix!.corrected_text,
    );
  });

  it("keeps sibling decorations aligned after the fix edits", () => {
    const state = checkedState();
    state.applyFix("c2");
    for (const id of ["c1", "c3", "c4"]) {
      const decoration = state.decoration(id)!;
      expect(state.text.slice(decoration.start, decoration.end)).toBe(
        decoration.claim.text,
      );
    }
  });

  it("refuses when the sentence changed since the check", () => {
    const state = checkedState();
    const second = state.decorations[1]!;
    state.replaceRange(second.start + 6, second.start + 6, "kanskje ");
    const edited = state.text;

    expect(state.applyFix("c2")).toEqual({ applied: false, reason: "stale" });
    expect(state.text).toBe(edited);
    expect(state.isFixStale("c2")).toBe(true);
  });

  it("reports claims without a suggestion", () => {
    const state = checkedState();
    expect(state.applyFix("c1")).toEqual({ applied: false, reason: "no-fix" });
    expect(state.applyFix("ghost")).toEqual({
      applied: false,
      reason: "no-decoration",
    });
  });
});

describe("rejectFix", () => {
  it("leaves the document byte-identical", () => {
    const state = checkedState();
    state.rejectFix("c2");
    expect(state.text).toBe(articleText);
    expect(state.decoration("c2")!.fixDismissed).toBe(true);
    expect(state.decoration("c2")!.color).toBe("red");
  });
});
