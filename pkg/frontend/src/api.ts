/** Translation requests with single-flight cancellation.
 *
 * At most one request is in flight: submitting a new text aborts the
 * previous request, so a slow response can never overwrite a newer one.
 */

import type { TranslationDoc } from "./types";

export class TranslationClient {
  private controller: AbortController | null = null;

  constructor(private readonly baseUrl: string = "") {}

  /** Rejects with DOMException(AbortError) when superseded. */
  async translate(text: string): Promise<TranslationDoc> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const response = await fetch(`${this.baseUrl}/api/translate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ text }),
      signal: controller.signal,
    });
    if (!response.ok) {
      let detail = `HTTP ${response.status}`;
      try {
        const body = (await response.json()) as { error?: string };
        if (body.error) detail = `${detail}: ${body.error}`;
      } catch {
        // Non-JSON error body; the status line is enough.
      }
      throw new Error(`translation failed (${detail})`);
    }
    return (await response.json()) as TranslationDoc;
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
