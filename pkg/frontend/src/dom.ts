/** Caption DOM construction and inline style application.
 *
 * The structure mirrors the static renderer: one paragraph per utterance,
 * word spans separated by plain spaces, one styled span per syllable, and
 * the word-final glyph wrapped so it never carries trailing letter-spacing.
 */

import type { CaptionDoc, StyleValues } from "./types";

/** Decimal with at most six places, no trailing zeros, no "-0". */
export function formatNumber(value: number): string {
  const text = value.toFixed(6).replace(/0+$/, "").replace(/\.$/, "");
  return text === "-0" || text === "" ? "0" : text;
}

/** Write one syllable's style; the CSS offset negates the upward-positive shift. */
export function applyStyle(element: HTMLElement, style: StyleValues): void {
  element.style.setProperty("font-variation-settings", `'wght' ${formatNumber(style.fontWeight)}`);
  element.style.top = `${formatNumber(-style.baselineShiftEm)}em`;
  element.style.letterSpacing = `${formatNumber(style.letterSpacingEm)}em`;
}

export interface CaptionDom {
  root: HTMLElement;
  /** One span per syllable, in schedule (document) order. */
  syllableSpans: HTMLElement[];
}

export function buildCaptionDom(doc: CaptionDoc, ownerDocument: Document): CaptionDom {
  const root = ownerDocument.createElement("div");
  root.className = "captions";
  root.style.fontFamily = `"${doc.fontFamily.replace(/"/g, "'")}", sans-serif`;
  const spans: HTMLElement[] = [];

  for (const utterance of doc.utterances) {
    const paragraph = ownerDocument.createElement("p");
    paragraph.className = "u";
    utterance.words.forEach((word, wordIndex) => {
      if (wordIndex > 0) {
        paragraph.appendChild(ownerDocument.createTextNode(" "));
      }
      const wordSpan = ownerDocument.createElement("span");
      wordSpan.className = "w";
      word.syllables.forEach((syllable, syllableIndex) => {
        const span = ownerDocument.createElement("span");
        span.className = "syl";
        span.style.position = "relative";
        if (syllableIndex === word.syllables.length - 1) {
          span.appendChild(ownerDocument.createTextNode(syllable.text.slice(0, -1)));
          const finalGlyph = ownerDocument.createElement("span");
          finalGlyph.className = "wf";
          finalGlyph.style.letterSpacing = "0em";
          finalGlyph.textContent = syllable.text.slice(-1);
          span.appendChild(finalGlyph);
        } else {
          span.textContent = syllable.text;
        }
        wordSpan.appendChild(span);
        spans.push(span);
      });
      paragraph.appendChild(wordSpan);
    });
    root.appendChild(paragraph);
  }
  return { root, syllableSpans: spans };
}
