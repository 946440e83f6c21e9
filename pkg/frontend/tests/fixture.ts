import { readFileSync } from "node:fs";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import type { JobPayload } from "../src/types.js";

const here = fileURLToPath(new URL(".", import.meta.url));

export interface GoldenManifest {
  language_param: string | null;
  payload: JobPayload;
}

export const manifest: GoldenManifest = JSON.parse(
  readFileSync(join(here, "fixtures", "article1.json"), "utf-8"),
);

export const articleText: string = readFileSync(
  join(here, "fixtures", "article1.txt"),
  "utf-8",
);

export function clonePayload(): JobPayload {
  return JSON.parse(JSON.stringify(manifest.payload)) as JobPayload;
}
