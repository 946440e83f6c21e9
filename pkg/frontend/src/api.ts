import type { JobPayload } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number | null = null,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface FactcheckClient {
  submit(text: string, language: string | null): Promise<string>;
  fetchJob(jobId: string): Promise<JobPayload>;
  health(): Promise<boolean>;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class HttpFactcheckClient implements FactcheckClient {
  private readonly base: string;

  constructor(
    baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {
    this.base = baseUrl.replace(/\/+$/, "");
  }

  async submit(text: string, language: string | null): Promise<string> {
    const body: Record<string, string> = { text };
    if (language !== null && language !== "") {
      body.language = language;
    }
    const response = await this.fetchFn(`${this.base}/api/v1/factcheck`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ApiError(`submit failed (${response.status})`, response.status);
    }
    const data = (await response.json()) as { job_id: string };
    return data.job_id;
  }

  async fetchJob(jobId: string): Promise<JobPayload> {
    const response = await this.fetchFn(`${this.base}/api/v1/factcheck/${jobId}`);
    if (!response.ok) {
      throw new ApiError(`job fetch failed (${response.status})`, response.status);
    }
    return (await response.json()) as JobPayload;
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchFn(`${this.base}/api/v1/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
