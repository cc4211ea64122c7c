/** Shapes of the .smt.json interchange document and derived scheduling data. */

export interface StyleValues {
  /** Variable-font wght axis value. */
  fontWeight: number;
  /** Em units; positive is visually upward. */
  baselineShiftEm: number;
  /** Em units; never negative. */
  letterSpacingEm: number;
}

export interface RawFeatures {
  magnitudeRms: number;
  /** null when the syllable is unvoiced. */
  pitchHz: number | null;
  durationSec: number;
}

export interface NormFeatures {
  loudness: number;
  pitch: number;
  tempo: number;
  pitchWasVoiced: boolean;
}

export interface DocSyllable {
  text: string;
  start: number;
  end: number;
  style: StyleValues;
  raw: RawFeatures;
  norm: NormFeatures;
}

export interface DocWord {
  text: string;
  syllables: DocSyllable[];
}

export interface DocUtterance {
  words: DocWord[];
}

export interface MapConfig {
  weightMin: number;
  weightMax: number;
  baselineMaxEm: number;
  spacingMaxEm: number;
  spacingPivot: number;
}

export interface CaptionDoc {
  version: string;
  fontFamily: string;
  config: MapConfig;
  utterances: DocUtterance[];
}

/** One scheduled transition: starts at startSec, lasts durationSec. */
export interface CueEntry {
  startSec: number;
  durationSec: number;
  targetStyle: StyleValues;
  /** Position of the syllable in document order; pairs entries with spans. */
  index: number;
}
