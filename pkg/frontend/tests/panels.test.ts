import { describe, expect, it } from "vitest";

import { escapeHtml, renderStagePanels } from "../src/panels";
import type { TranslationDoc } from "../src/types";
import translation from "./fixtures/translation.json";

const doc = translation as unknown as TranslationDoc;

const count = (haystack: string, needle: string) => haystack.split(needle).length - 1;

describe("stage fidelity", () => {
  const html = renderStagePanels(doc);

  it("shows every input token exactly once", () => {
    doc.tokens.forEach((_, i) => {
      expect(count(html, `data-token-index="${i}"`)).toBeGreaterThanOrEqual(1);
    });
    // Token chips specifically: one per token, no more.
    expect(count(html, 'class="token')).toBe(doc.tokens.length);
  });

  it("marks each token retained or dropped, dropped struck through", () => {
    const retained = new Set(doc.retained);
    doc.tokens.forEach((token, i) => {
      const chip = new RegExp(
        `<span class="token (retained|dropped)" data-token-index="${i}">` +
          `<span class="word">(<s>)?${token.text}`,
      );
      const match = html.match(chip);
      expect(match, `chip for token ${i}`).not.toBeNull();
      if (retained.has(i)) {
        expect(match![1]).toBe("retained");
        expect(match![2]).toBeUndefined();
      } else {
        expect(match![1]).toBe("dropped");
        expect(match![2]).toBe("<s>");
      }
    });
  });

  it("drops the expected words in the golden sentence", () => {
    // ഞാൻ ഒരു കുട്ടി ആണ്: the determiner and copula are dropped.
    expect(doc.retained).toEqual([0, 2]);
    expect(html).toContain("<s>ഒരു</s>");
    expect(html).toContain("<s>ആണ്</s>");
  });

  it("renders one replay button per gloss", () => {
    expect(count(html, "data-gloss=")).toBe(doc.glosses.length);
    for (const g of doc.glosses) {
      expect(html).toContain(`data-gloss="${g.gloss}"`);
    }
  });

  it("renders roots for every retained token", () => {
    expect(count(html, 'class="root')).toBe(doc.retained.length);
  });
});

describe("escaping", () => {
  it("escapes markup in document text", () => {
    expect(escapeHtml(`<s>&"x"</s>`)).toBe("&lt;s&gt;&amp;&quot;x&quot;&lt;/s&gt;");
    const hostile: TranslationDoc = {
      ...doc,
      tokens: [{ text: "<script>alert(1)</script>", start: 0, end: 5 }],
      tagged: [{ text: "<script>", tag: "UNKNOWN", features: [], matched: null }],
      retained: [0],
      roots: ["<script>"],
      glosses: [{ gloss: "<b>", source: "LEXICON", token: 0 }],
      warnings: [{ code: "oov", message: "<img onerror>" }],
    };
    const html = renderStagePanels(hostile);
    expect(html).not.toContain("<script>");
    expect(html).not.toContain("<img");
    expect(html).toContain("&lt;script&gt;");
  });
});
