import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { parseCaptionDoc } from "../src/doc";
import type { CaptionDoc, StyleValues } from "../src/types";

const here = dirname(fileURLToPath(import.meta.url));
export const FIXTURES = join(here, "..", "..", "tests", "fixtures");

export function loadFixtureDocJson(): unknown {
  return JSON.parse(readFileSync(join(FIXTURES, "golden", "poem.smt.json"), "utf-8"));
}

export function loadFixtureDoc(): CaptionDoc {
  return parseCaptionDoc(loadFixtureDocJson());
}

export function loadGoldenMarkup(): string {
  return readFileSync(join(FIXTURES, "golden", "poem.html"), "utf-8");
}

/** Read back the three style values written as inline styles on a span. */
export function readSpanStyle(span: HTMLElement): StyleValues {
  const variation = span.style.getPropertyValue("font-variation-settings");
  const weightMatch = /'wght'\s+(-?[\d.]+)/.exec(variation);
  if (!weightMatch) {
    throw new Error(`no wght axis in ${JSON.stringify(variation)}`);
  }
  const parseEm = (text: string): number => {
    const match = /(-?[\d.]+)em/.exec(text);
    if (!match) {
      throw new Error(`not an em length: ${JSON.stringify(text)}`);
    }
    return Number(match[1]);
  };
  const negate = (value: number): number => (value === 0 ? 0 : -value);
  return {
    fontWeight: Number(weightMatch[1]),
    baselineShiftEm: negate(parseEm(span.style.top || "0em")),
    letterSpacingEm: parseEm(span.style.letterSpacing || "0em"),
  };
}

/** Styles of the .syl spans of a static render, in document order. */
export function staticRenderStyles(markup: string): StyleValues[] {
  const parsed = new DOMParser().parseFromString(markup, "text/html");
  return Array.from(parsed.querySelectorAll<HTMLElement>("span.syl")).map(readSpanStyle);
}
