/** JSON schema served by the checking service. */

export type JobStatusName = "Pending" | "Running" | "Done" | "Failed";
export type ClaimStatusName = "Detected" | "Verifying" | "Verified" | "Failed";
export type ClaimLabelName = "Supported" | "Disputed" | "Unverifiable";
export type StanceName = "Supports" | "Refutes";

export interface EvidenceEntry {
  url: string;
  title: string;
  snippet: string;
  similarity: number;
  stance: StanceName;
}

export interface SpanEditPayload {
  /** Offsets are relative to the claim's sentence text. */
  start: number;
  end: number;
  replacement: string;
}

export interface FixPayload {
  corrected_text: string;
  edits: SpanEditPayload[];
}

export interface ClaimPayload {
  id: string;
  /** Character offsets into the submitted article text. */
  start: number;
  end: number;
  text: string;
  status: ClaimStatusName;
  label: ClaimLabelName | null;
  supports: number;
  refutes: number;
  justification: string | null;
  fix: FixPayload | null;
  evidence: EvidenceEntry[];
}

export interface JobPayload {
  status: JobStatusName;
  language: string;
  claims: ClaimPayload[];
}
