export { parseCaptionDoc, DocValidationError } from "./doc";
export { buildSchedule, neutralStyle, styleAt, easeOut } from "./schedule";
export { buildCaptionDom, applyStyle, formatNumber } from "./dom";
export { CaptionPlayer, SmtPlayerElement, registerPlayerElement } from "./player";
export type {
  CaptionDoc,
  CueEntry,
  DocSyllable,
  DocUtterance,
  DocWord,
  MapConfig,
  NormFeatures,
  RawFeatures,
  StyleValues,
} from "./types";
