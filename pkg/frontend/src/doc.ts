/** Validation of the .smt.json interchange document. */

import type {
  CaptionDoc,
  DocSyllable,
  DocUtterance,
  DocWord,
  MapConfig,
  NormFeatures,
  RawFeatures,
  StyleValues,
} from "./types";

export class DocValidationError extends Error {
  readonly path: string;

  constructor(message: string, path: string) {
    super(`${path}: ${message}`);
    this.name = "DocValidationError";
    this.path = path;
  }
}

function asObject(value: unknown, path: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new DocValidationError("expected an object", path);
  }
  return value as Record<string, unknown>;
}

function needNumber(obj: Record<string, unknown>, key: string, path: string): number {
  const value = obj[key];
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new DocValidationError(`field '${key}' must be a finite number`, path);
  }
  return value;
}

function needString(obj: Record<string, unknown>, key: string, path: string): string {
  const value = obj[key];
  if (typeof value !== "string") {
    throw new DocValidationError(`field '${key}' must be a string`, path);
  }
  return value;
}

function needArray(obj: Record<string, unknown>, key: string, path: string): unknown[] {
  const value = obj[key];
  if (!Array.isArray(value)) {
    throw new DocValidationError(`field '${key}' must be an array`, path);
  }
  return value;
}

function parseConfig(value: unknown, path: string): MapConfig {
  const obj = asObject(value, path);
  const config = {
    weightMin: needNumber(obj, "weightMin", path),
    weightMax: needNumber(obj, "weightMax", path),
    baselineMaxEm: needNumber(obj, "baselineMaxEm", path),
    spacingMaxEm: needNumber(obj, "spacingMaxEm", path),
    spacingPivot: needNumber(obj, "spacingPivot", path),
  };
  if (config.weightMin >= config.weightMax) {
    throw new DocValidationError("weightMin must be below weightMax", path);
  }
  if (config.baselineMaxEm <= 0 || config.spacingMaxEm <= 0) {
    throw new DocValidationError("em bounds must be positive", path);
  }
  return config;
}

function parseStyle(value: unknown, config: MapConfig, path: string): StyleValues {
  const obj = asObject(value, path);
  const style = {
    fontWeight: needNumber(obj, "fontWeight", path),
    baselineShiftEm: needNumber(obj, "baselineShiftEm", path),
    letterSpacingEm: needNumber(obj, "letterSpacingEm", path),
  };
  if (style.fontWeight < config.weightMin || style.fontWeight > config.weightMax) {
    throw new DocValidationError(`fontWeight ${style.fontWeight} outside config range`, path);
  }
  if (Math.abs(style.baselineShiftEm) > config.baselineMaxEm) {
    throw new DocValidationError(`baselineShiftEm ${style.baselineShiftEm} exceeds bound`, path);
  }
  if (style.letterSpacingEm < 0 || style.letterSpacingEm > config.spacingMaxEm) {
    throw new DocValidationError(`letterSpacingEm ${style.letterSpacingEm} outside bounds`, path);
  }
  return style;
}

function parseRaw(value: unknown, path: string): RawFeatures {
  const obj = asObject(value, path);
  const pitch = obj["pitchHz"];
  if (pitch !== null && (typeof pitch !== "number" || !Number.isFinite(pitch) || pitch <= 0)) {
    throw new DocValidationError("pitchHz must be a positive number or null", path);
  }
  return {
    magnitudeRms: needNumber(obj, "magnitudeRms", path),
    pitchHz: pitch,
    durationSec: needNumber(obj, "durationSec", path),
  };
}

function parseNorm(value: unknown, path: string): NormFeatures {
  const obj = asObject(value, path);
  const norm = {
    loudness: needNumber(obj, "loudness", path),
    pitch: needNumber(obj, "pitch", path),
    tempo: needNumber(obj, "tempo", path),
    pitchWasVoiced: obj["pitchWasVoiced"],
  };
  for (const key of ["loudness", "pitch", "tempo"] as const) {
    if (norm[key] < 0 || norm[key] > 1) {
      throw new DocValidationError(`${key} outside [0, 1]`, path);
    }
  }
  if (typeof norm.pitchWasVoiced !== "boolean") {
    throw new DocValidationError("field 'pitchWasVoiced' must be a boolean", path);
  }
  return norm as NormFeatures;
}

function parseSyllable(value: unknown, config: MapConfig, path: string): DocSyllable {
  const obj = asObject(value, path);
  const text = needString(obj, "text", path);
  const start = needNumber(obj, "start", path);
  const end = needNumber(obj, "end", path);
  if (text.length === 0) {
    throw new DocValidationError("syllable text must not be empty", path);
  }
  if (start < 0 || start >= end) {
    throw new DocValidationError(`invalid timing [${start}, ${end}]`, path);
  }
  return {
    text,
    start,
    end,
    style: parseStyle(obj["style"], config, `${path}.style`),
    raw: parseRaw(obj["raw"], `${path}.raw`),
    norm: parseNorm(obj["norm"], `${path}.norm`),
  };
}

function parseWord(value: unknown, config: MapConfig, path: string): DocWord {
  const obj = asObject(value, path);
  const text = needString(obj, "text", path);
  const rawSyllables = needArray(obj, "syllables", path);
  if (rawSyllables.length === 0) {
    throw new DocValidationError("word must contain at least one syllable", path);
  }
  const syllables = rawSyllables.map((s, i) => parseSyllable(s, config, `${path}.syllables[${i}]`));
  for (let i = 1; i < syllables.length; i += 1) {
    if (syllables[i]!.start < syllables[i - 1]!.end) {
      throw new DocValidationError("syllable timing runs backwards", `${path}.syllables[${i}]`);
    }
  }
  if (syllables.map((s) => s.text).join("") !== text) {
    throw new DocValidationError("syllable texts do not join to the word text", path);
  }
  return { text, syllables };
}

function parseUtterance(value: unknown, config: MapConfig, path: string): DocUtterance {
  const obj = asObject(value, path);
  const words = needArray(obj, "words", path);
  if (words.length === 0) {
    throw new DocValidationError("utterance must contain at least one word", path);
  }
  return { words: words.map((w, i) => parseWord(w, config, `${path}.words[${i}]`)) };
}

/** Parse and validate a caption document; throws DocValidationError with a path. */
export function parseCaptionDoc(data: unknown): CaptionDoc {
  const root = asObject(data, "$");
  const config = parseConfig(root["config"], "config");
  return {
    version: needString(root, "version", "$"),
    fontFamily: needString(root, "fontFamily", "$"),
    config,
    utterances: needArray(root, "utterances", "$").map((u, i) =>
      parseUtterance(u, config, `utterances[${i}]`),
    ),
  };
}
