import { fnv1a } from "./hash.js";
import type { ClaimLabelName, ClaimPayload, JobPayload } from "./types.js";

export type DecorationColor = "red" | "green" | "gray";

export function colorForLabel(label: ClaimLabelName | null): DecorationColor {
  if (label === "Disputed") return "red";
  if (label === "Supported") return "green";
  return "gray";
}

export interface Decoration {
  claimId: string;
  start: number;
  end: number;
  color: DecorationColor;
  /** Hash of the sentence text the server checked; guards stale fixes. */
  checkedHash: number;
  /** Set once a fix is applied locally, until the next check runs. */
  pendingRecheck: boolean;
  fixDismissed: boolean;
  claim: ClaimPayload;
}

export type FixOutcome =
  | { applied: true }
  | { applied: false; reason: "no-decoration" | "no-fix" | "stale" };

interface JournalEntry {
  start: number;
  removed: number;
  inserted: number;
}

function mapStart(pos: number, edit: JournalEntry): number {
  if (pos >= edit.start + edit.removed) return pos + edit.inserted - edit.removed;
  if (pos <= edit.start) return pos;
  return edit.start;
}

function mapEnd(pos: number, edit: JournalEntry): number {
  if (pos >= edit.start + edit.removed) return pos + edit.inserted - edit.removed;
  if (pos <= edit.start) return pos;
  return edit.start + edit.inserted;
}

/**
 * The editor document plus its claim decorations.
 *
 * Claim offsets arrive in the coordinates of the text that was submitted,
 * so every local edit since then is journaled and both existing
 * decorations and late-arriving claims are mapped through it.
 */
export class EditorState {
  text: string;
  decorations: Decoration[] = [];
  errorBanner: string | null = null;
  private journal: JournalEntry[] = [];

  constructor(text = "") {
    this.text = text;
  }

  /** Snapshot point for a new check: claim offsets refer to this text. */
  beginCheck(): void {
    this.journal = [];
    this.decorations = [];
    this.errorBanner = null;
  }

  replaceRange(start: number, end: number, replacement: string): void {
    if (start < 0 || end < start || end > this.text.length) {
      throw new RangeError(`bad edit range [${start}, ${end}) for length ${this.text.length}`);
    }
    this.text = this.text.slice(0, start) + replacement + this.text.slice(end);
    const entry: JournalEntry = { start, removed: end - start, inserted: replacement.length };
    this.journal.push(entry);
    for (const decoration of this.decorations) {
      decoration.start = mapStart(decoration.start, entry);
      decoration.end = mapEnd(decoration.end, entry);
    }
    this.decorations = this.decorations.filter((d) => d.start < d.end);
  }

  /** Merge a polled payload; one decoration per claim id, colors tracking labels. */
  syncFromPayload(payload: JobPayload): void {
    for (const claim of payload.claims) {
      const existing = this.decorations.find((d) => d.claimId === claim.id);
      if (existing) {
        existing.claim = claim;
        if (!existing.pendingRecheck) {
          existing.color = colorForLabel(claim.label);
        }
        continue;
      }
      let start = claim.start;
      let end = claim.end;
      for (const entry of this.journal) {
        start = mapStart(start, entry);
        end = mapEnd(end, entry);
      }
      if (start >= end) continue;
      this.decorations.push({
        claimId: claim.id,
        start,
        end,
        color: colorForLabel(claim.label),
        checkedHash: fnv1a(claim.text),
        pendingRecheck: false,
        fixDismissed: false,
        claim,
      });
    }
  }

  decoration(claimId: string): Decoration | undefined {
    return this.decorations.find((d) => d.claimId === claimId);
  }

  currentTextOf(claimId: string): string | null {
    const decoration = this.decoration(claimId);
    return decoration ? this.text.slice(decoration.start, decoration.end) : null;
  }

  /** True when the claim's text was edited after the server checked it. */
  isFixStale(claimId: string): boolean {
    const decoration = this.decoration(claimId);
    if (!decoration) return true;
    return fnv1a(this.text.slice(decoration.start, decoration.end)) !== decoration.checkedHash;
  }

  /**
   * Apply the claim's suggested fix to its current range.
   *
   * Edits are sentence-relative and applied right to left so earlier
   * offsets stay valid; afterwards the range reads exactly
   * corrected_text and the decoration waits gray for a recheck.
   */
  applyFix(claimId: string): FixOutcome {
    const decoration = this.decoration(claimId);
    if (!decoration) return { applied: false, reason: "no-decoration" };
    const fix = decoration.claim.fix;
    if (!fix) return { applied: false, reason: "no-fix" };
    if (this.isFixStale(claimId)) return { applied: false, reason: "stale" };

    const base = decoration.start;
    const edits = [...fix.edits].sort((a, b) => b.start - a.start);
    for (const edit of edits) {
      this.replaceRange(base + edit.start, base + edit.end, edit.replacement);
    }
    decoration.pendingRecheck = true;
    decoration.color = "gray";
    decoration.checkedHash = fnv1a(fix.corrected_text);
    return { applied: true };
  }

  /** Dismiss a suggestion; the document is left untouched. */
  rejectFix(claimId: string): void {
    const decoration = this.decoration(claimId);
    if (decoration) {
      decoration.fixDismissed = true;
    }
  }
}
