/** Stage inspector rendering: pure document-to-HTML functions.
 *
 * Every input token appears exactly once, marked retained or dropped
 * (dropped words are struck through). Gloss chips carry data-gloss for the
 * replay click handler; all document text is escaped.
 */

import type { TranslationDoc } from "./types";

export function escapeHtml(s: string): string {
  return s
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function renderStagePanels(doc: TranslationDoc): string {
  const retained = new Set(doc.retained);
  const rootOf = new Map<number, string>();
  doc.retained.forEach((tokenIndex, k) => {
    const root = doc.roots[k];
    if (root !== undefined) rootOf.set(tokenIndex, root);
  });

  const tokenChips = doc.tokens
    .map((token, i) => {
      const tagged = doc.tagged[i];
      const tag = tagged === undefined ? "" : tagged.tag;
      const kept = retained.has(i);
      const cls = kept ? "token retained" : "token dropped";
      const text = escapeHtml(token.text);
      const word = kept ? text : `<s>${text}</s>`;
      return (
        `<span class="${cls}" data-token-index="${i}">` +
        `<span class="word">${word}</span>` +
        `<span class="tag">${escapeHtml(tag)}</span>` +
        `</span>`
      );
    })
    .join("");

  const rootChips = doc.retained
    .map((tokenIndex) => {
      const root = rootOf.get(tokenIndex) ?? "";
      const surface = doc.tokens[tokenIndex]?.text ?? "";
      const changed = root !== surface ? " stemmed" : "";
      return `<span class="root${changed}">${escapeHtml(root)}</span>`;
    })
    .join("");

  const glossChips = doc.glosses
    .map((g) => {
      const cls = g.source === "FINGERSPELL" ? "gloss fingerspell" : "gloss lexicon";
      return (
        `<button class="${cls}" data-gloss="${escapeHtml(g.gloss)}" ` +
        `data-token-index="${g.token}" title="replay this sign">` +
        `${escapeHtml(g.gloss)}</button>`
      );
    })
    .join("");

  const warnings = doc.warnings
    .map((w) => `<li class="warning ${escapeHtml(w.code)}">${escapeHtml(w.message)}</li>`)
    .join("");

  return (
    `<section class="stage"><h3>Tokens &amp; tags</h3><div class="chips">${tokenChips}</div></section>` +
    `<section class="stage"><h3>Roots</h3><div class="chips">${rootChips}</div></section>` +
    `<section class="stage"><h3>Glosses</h3><div class="chips">${glossChips}</div></section>` +
    (warnings === "" ? "" : `<section class="stage"><h3>Warnings</h3><ul>${warnings}</ul></section>`)
  );
}
