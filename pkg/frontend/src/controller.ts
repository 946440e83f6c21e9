import type { FactcheckClient } from "./api.js";
import type { EditorState } from "./editorState.js";
import type { JobPayload } from "./types.js";

const DEFAULT_POLL_INTERVAL_MS = 1000;
const DEFAULT_MAX_POLLS = 600;

export interface ControllerOptions {
  pollIntervalMs?: number;
  maxPolls?: number;
  sleep?: (ms: number) => Promise<void>;
}

function defaultSleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

/** Submits the document and polls the job until it settles. */
export class CheckController {
  private readonly pollIntervalMs: number;
  private readonly maxPolls: number;
  private readonly sleep: (ms: number) => Promise<void>;
  running = false;

  constructor(
    private readonly client: FactcheckClient,
    private readonly state: EditorState,
    options: ControllerOptions = {},
  ) {
    this.pollIntervalMs = options.pollIntervalMs ?? DEFAULT_POLL_INTERVAL_MS;
    this.maxPolls = options.maxPolls ?? DEFAULT_MAX_POLLS;
    this.sleep = options.sleep ?? defaultSleep;
  }

  /**
   * Run one check over the current document.
   *
   * Returns the final payload, or null when a check is already running
   * or the server could not be reached (the document is never touched;
   * failures only raise the error banner).
   */
  async runCheck(language: string | null = null): Promise<JobPayload | null> {
    if (this.running) return null;
    this.running = true;
    try {
      this.state.beginCheck();
      const jobId = await this.client.submit(this.state.text, language);
      let payload = await this.client.fetchJob(jobId);
      this.state.syncFromPayload(payload);
      let polls = 0;
      while (payload.status !== "Done" && payload.status !== "Failed") {
        if (++polls > this.maxPolls) {
          throw new Error(`job ${jobId} still running after ${this.maxPolls} polls`);
        }
        await this.sleep(this.pollIntervalMs);
        payload = await this.client.fetchJob(jobId);
        this.state.syncFromPayload(payload);
      }
      if (payload.status === "Failed") {
        this.state.errorBanner = "The server could not check this article.";
      }
      return payload;
    } catch (error) {
      this.state.errorBanner = error instanceof Error ? error.message : String(error);
      return null;
    } finally {
      this.running = false;
    }
  }
}
