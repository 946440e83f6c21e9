import type { EditorState } from "./editorState.js";
import type { EvidenceEntry } from "./types.js";

export const NO_EVIDENCE_MESSAGE = "No evidence found.";

export interface EvidencePane {
  claimId: string;
  claimText: string;
  heading: string;
  justification: string | null;
  entries: EvidenceEntry[];
  emptyMessage: string | null;
  fixAvailable: boolean;
  fixStale: boolean;
  correctedText: string | null;
}

/** What the right-hand pane shows for one selected claim. */
export function buildEvidencePane(state: EditorState, claimId: string): EvidencePane | null {
  const decoration = state.decoration(claimId);
  if (!decoration) return null;
  const claim = decoration.claim;
  const heading = decoration.pendingRecheck
    ? "Awaiting recheck"
    : (claim.label ?? "Checking…");
  const stale = state.isFixStale(claimId);
  return {
    claimId,
    claimText: claim.text,
    heading,
    justification: claim.justification,
    entries: claim.evidence,
    emptyMessage: claim.evidence.length === 0 ? NO_EVIDENCE_MESSAGE : null,
    fixAvailable:
      claim.fix !== null &&
      !decoration.fixDismissed &&
      !decoration.pendingRecheck &&
      !stale,
    fixStale: claim.fix !== null && stale,
    correctedText: claim.fix?.corrected_text ?? null,
  };
}
