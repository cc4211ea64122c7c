import { describe, expect, it } from "vitest";

import { DocValidationError, parseCaptionDoc } from "../src/doc";
import { loadFixtureDocJson } from "./helpers";

function fixture(): any {
  return loadFixtureDocJson();
}

describe("parseCaptionDoc", () => {
  it("accepts the fixture document", () => {
    const doc = parseCaptionDoc(fixture());
    expect(doc.version).toBe("1.0");
    expect(doc.fontFamily).toBe("Recursive");
    expect(doc.utterances).toHaveLength(3);
    const syllables = doc.utterances.flatMap((u) => u.words.flatMap((w) => w.syllables));
    expect(syllables).toHaveLength(18);
  });

  it("keeps unvoiced pitch as null", () => {
    const doc = parseCaptionDoc(fixture());
    const speaks = doc.utterances[2]!.words[3]!.syllables[0]!;
    expect(speaks.text).toBe("speaks");
    expect(speaks.raw.pitchHz).toBeNull();
    expect(speaks.norm.pitchWasVoiced).toBe(false);
  });

  it("rejects non-objects", () => {
    expect(() => parseCaptionDoc(null)).toThrow(DocValidationError);
    expect(() => parseCaptionDoc([])).toThrow(DocValidationError);
  });

  it("rejects a missing field with its path", () => {
    const raw = fixture();
    delete raw.utterances[0].words[0].syllables[0].style.fontWeight;
    try {
      parseCaptionDoc(raw);
      expect.unreachable();
    } catch (error) {
      expect(error).toBeInstanceOf(DocValidationError);
      expect((error as DocValidationError).path).toBe(
        "utterances[0].words[0].syllables[0].style",
      );
    }
  });

  it("rejects styles outside the config bounds", () => {
    const raw = fixture();
    raw.utterances[0].words[0].syllables[0].style.fontWeight = 10000;
    expect(() => parseCaptionDoc(raw)).toThrow(/outside config range/);
  });

  it("rejects negative letter spacing", () => {
    const raw = fixture();
    raw.utterances[0].words[0].syllables[0].style.letterSpacingEm = -0.2;
    expect(() => parseCaptionDoc(raw)).toThrow(DocValidationError);
  });

  it("rejects backwards timing within a word", () => {
    const raw = fixture();
    const syllables = raw.utterances[0].words[0].syllables;
    syllables[1].start = syllables[0].start - 0.1;
    expect(() => parseCaptionDoc(raw)).toThrow(/backwards|invalid timing/);
  });

  it("rejects norm values outside the unit interval", () => {
    const raw = fixture();
    raw.utterances[0].words[0].syllables[0].norm.tempo = 2;
    expect(() => parseCaptionDoc(raw)).toThrow(/outside \[0, 1\]/);
  });

  it("rejects syllables that do not join to the word text", () => {
    const raw = fixture();
    raw.utterances[0].words[0].text = "changed";
    expect(() => parseCaptionDoc(raw)).toThrow(/join/);
  });
});
