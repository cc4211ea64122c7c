/** Cue scheduling: per-syllable style as a pure function of media time.
 *
 * Each syllable transitions from the neutral style toward its target,
 * starting at the syllable's start time and lasting the syllable's
 * duration, on an ease-out curve. Because the result depends only on the
 * current time, pausing freezes styles, seeking backward resets syllables
 * whose start lies ahead of the new position, and missed frames cost
 * nothing: the next sample lands exactly where playback is.
 */

import type { CaptionDoc, CueEntry, StyleValues } from "./types";

/** The resting appearance: mid-weight, on the baseline, no extra spacing. */
export function neutralStyle(doc: CaptionDoc): StyleValues {
  return {
    fontWeight: (doc.config.weightMin + doc.config.weightMax) / 2,
    baselineShiftEm: 0,
    letterSpacingEm: 0,
  };
}

/** Flatten the document into transition entries sorted by start time. */
export function buildSchedule(doc: CaptionDoc): CueEntry[] {
  const entries: CueEntry[] = [];
  let index = 0;
  for (const utterance of doc.utterances) {
    for (const word of utterance.words) {
      for (const syllable of word.syllables) {
        entries.push({
          startSec: syllable.start,
          durationSec: syllable.end - syllable.start,
          targetStyle: syllable.style,
          index,
        });
        index += 1;
      }
    }
  }
  entries.sort((a, b) => a.startSec - b.startSec);
  return entries;
}

/** Ease-out cubic: fast onset, gentle landing. */
export function easeOut(u: number): number {
  const inverted = 1 - u;
  return 1 - inverted * inverted * inverted;
}

/**
 * Style of one syllable at media time t. Exactly neutral before the
 * syllable starts; exactly the target once the transition has run its
 * course (t >= start + duration).
 */
export function styleAt(entry: CueEntry, t: number, neutral: StyleValues): StyleValues {
  if (t <= entry.startSec) {
    return neutral;
  }
  const u = (t - entry.startSec) / entry.durationSec;
  if (u >= 1) {
    return entry.targetStyle;
  }
  const e = easeOut(u);
  const target = entry.targetStyle;
  return {
    fontWeight: neutral.fontWeight + (target.fontWeight - neutral.fontWeight) * e,
    baselineShiftEm: neutral.baselineShiftEm + (target.baselineShiftEm - neutral.baselineShiftEm) * e,
    letterSpacingEm: neutral.letterSpacingEm + (target.letterSpacingEm - neutral.letterSpacingEm) * e,
  };
}
