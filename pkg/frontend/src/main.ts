import { HttpFactcheckClient } from "./api.js";
import { CheckController } from "./controller.js";
import { EditorState } from "./editorState.js";
import { buildEvidencePane } from "./evidence.js";

const DEFAULT_BASE_URL = "http://127.0.0.1:8080";

const SAMPLE_TEXT = [
  "Oslo er hovedstaden i Norge. Byen har om lag 250 000 innbyggere, og",
  "folketallet synker. Sognefjorden er den lengste fjorden i landet.",
  "Mange mener byen er vakker om vinteren.",
].join(" ");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;");
}

/** Single-span diff of a textarea edit: common prefix/suffix trim. */
function diffEdit(before: string, after: string): { start: number; end: number; replacement: string } | null {
  if (before === after) return null;
  let prefix = 0;
  const max = Math.min(before.length, after.length);
  while (prefix < max && before[prefix] === after[prefix]) prefix++;
  let suffix = 0;
  while (
    suffix < max - prefix &&
    before[before.length - 1 - suffix] === after[after.length - 1 - suffix]
  ) {
    suffix++;
  }
  return {
    start: prefix,
    end: before.length - suffix,
    replacement: after.slice(prefix, after.length - suffix),
  };
}

function main(): void {
  const state = new EditorState(SAMPLE_TEXT);
  let selectedClaim: string | null = null;

  const editor = el<HTMLTextAreaElement>("editor");
  const preview = el<HTMLDivElement>("preview");
  const pane = el<HTMLDivElement>("evidence");
  const banner = el<HTMLDivElement>("banner");
  const status = el<HTMLSpanElement>("status");
  const checkButton = el<HTMLButtonElement>("check");
  const languageSelect = el<HTMLSelectElement>("language");
  const baseUrlInput = el<HTMLInputElement>("base-url");

  baseUrlInput.value = DEFAULT_BASE_URL;
  editor.value = state.text;

  function renderPreview(): void {
    const ordered = [...state.decorations].sort((a, b) => a.start - b.start);
    let html = "";
    let cursor = 0;
    for (const d of ordered) {
      html += escapeHtml(state.text.slice(cursor, d.start));
      const cls = `claim claim-${d.color}${d.claimId === selectedClaim ? " selected" : ""}`;
      html += `<span class="${cls}" data-claim="${d.claimId}">`;
      html += escapeHtml(state.text.slice(d.start, d.end));
      html += "</span>";
      cursor = d.end;
    }
    html += escapeHtml(state.text.slice(cursor));
    preview.innerHTML = html || "<em>Empty document</em>";
    banner.textContent = state.errorBanner ?? "";
    banner.style.display = state.errorBanner ? "block" : "none";
  }

  function renderPane(): void {
    if (!selectedClaim) {
      pane.innerHTML = "<em>Select a highlighted claim to see its evidence.</em>";
      return;
    }
    const model = buildEvidencePane(state, selectedClaim);
    if (!model) {
      pane.innerHTML = "<em>Claim no longer present.</em>";
      return;
    }
    let html = `<h3>${escapeHtml(model.heading)}</h3>`;
    html += `<p class="claim-text">${escapeHtml(model.claimText)}</p>`;
    if (model.justification) {
      html += `<p>${escapeHtml(model.justification)}</p>`;
    }
    if (model.emptyMessage) {
      html += `<p><em>${escapeHtml(model.emptyMessage)}</em></p>`;
    }
    for (const entry of model.entries) {
      html += `<div class="snippet"><a href="${encodeURI(entry.url)}" target="_blank" rel="noreferrer">`;
      html += `${escapeHtml(entry.title)}</a> <span class="stance stance-${entry.stance}">`;
      html += `${entry.stance}</span> <span class="sim">${entry.similarity.toFixed(2)}</span>`;
      html += `<p>${escapeHtml(entry.snippet)}</p></div>`;
    }
    if (model.fixStale) {
      html += `<p class="stale">The sentence changed since this check; the fix is disabled.</p>`;
    }
    if (model.fixAvailable && model.correctedText) {
      html += `<p>Suggested: <code>${escapeHtml(model.correctedText)}</code></p>`;
      html += `<button id="apply-fix">Apply fix</button> <button id="reject-fix">Reject</button>`;
    }
    pane.innerHTML = html;
    const applyButton = document.getElementById("apply-fix");
    applyButton?.addEventListener("click", () => {
      state.applyFix(selectedClaim!);
      editor.value = state.text;
      renderAll();
    });
    const rejectButton = document.getElementById("reject-fix");
    rejectButton?.addEventListener("click", () => {
      state.rejectFix(selectedClaim!);
      renderAll();
    });
  }

  function renderAll(): void {
    renderPreview();
    renderPane();
  }

  editor.addEventListener("input", () => {
    const edit = diffEdit(state.text, editor.value);
    if (edit) {
      state.replaceRange(edit.start, edit.end, edit.replacement);
      renderAll();
    }
  });

  preview.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest("[data-claim]");
    selectedClaim = target ? (target as HTMLElement).dataset.claim ?? null : null;
    renderAll();
  });

  checkButton.addEventListener("click", async () => {
    const client = new HttpFactcheckClient(baseUrlInput.value);
    const controller = new CheckController(client, state);
    checkButton.disabled = true;
    status.textContent = "Checking…";
    selectedClaim = null;
    const language = languageSelect.value === "auto" ? null : languageSelect.value;
    const payload = await controller.runCheck(language);
    status.textContent = payload ? `Job ${payload.status} (${payload.language})` : "";
    checkButton.disabled = false;
    renderAll();
  });

  renderAll();
}

main();
