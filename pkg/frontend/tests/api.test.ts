import { afterEach, describe, expect, it, vi } from "vitest";

import { TranslationClient, isAbort } from "../src/api";

afterEach(() => {
  vi.unstubAllGlobals();
});

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("TranslationClient", () => {
  it("posts the text and returns the parsed document", async () => {
    const fetchMock = vi.fn(async (url: RequestInfo | URL, init?: RequestInit) => {
      expect(String(url)).toBe("/api/translate");
      expect(init?.method).toBe("POST");
      expect(JSON.parse(String(init?.body))).toEqual({ text: "ഞാൻ" });
      return jsonResponse({ format: "mal2sign-translation/1", glosses: [] });
    });
    vi.stubGlobal("fetch", fetchMock);
    const doc = await new TranslationClient().translate("ഞാൻ");
    expect(doc.format).toBe("mal2sign-translation/1");
  });

  it("throws a descriptive error on a 400 response", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => jsonResponse({ error: "malformed-request" }, 400)),
    );
    await expect(new TranslationClient().translate("x")).rejects.toThrow(
      /HTTP 400: malformed-request/,
    );
  });

  it("aborts the previous request when a new one is submitted", async () => {
    const seen: AbortSignal[] = [];
    vi.stubGlobal(
      "fetch",
      vi.fn((_url: RequestInfo | URL, init?: RequestInit) => {
        const signal = init?.signal as AbortSignal;
        seen.push(signal);
        return new Promise<Response>((resolve, reject) => {
          signal.addEventListener("abort", () =>
            reject(new DOMException("Aborted", "AbortError")),
          );
          // Resolve slowly so a second submit can overtake the first.
          setTimeout(() => resolve(jsonResponse({ format: "f" })), 50);
        });
      }),
    );
    const client = new TranslationClient();
    const first = client.translate("old text");
    const second = client.translate("new text");
    await expect(first).rejects.toSatisfy(isAbort);
    await expect(second).resolves.toEqual({ format: "f" });
    expect(seen).toHaveLength(2);
    expect(seen[0]!.aborted).toBe(true);
    expect(seen[1]!.aborted).toBe(false);
  });
});
