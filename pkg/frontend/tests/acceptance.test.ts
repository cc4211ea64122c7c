/** Acceptance: scripted playback converges to the static render, and the
 * player is exactly neutral before playback and after seeking back to 0. */

import { describe, expect, it } from "vitest";

import { CaptionPlayer } from "../src/player";
import { neutralStyle } from "../src/schedule";
import { loadFixtureDoc, loadGoldenMarkup, readSpanStyle, staticRenderStyles } from "./helpers";

function makePlayer() {
  const video = document.createElement("video");
  const container = document.createElement("div");
  document.body.append(video, container);
  return { player: new CaptionPlayer(video, container), video };
}

describe("acceptance", () => {
  it("animated playback converges to the static render (1% weight, 0.01em offsets)", () => {
    const doc = loadFixtureDoc();
    const { player, video } = makePlayer();
    player.loadDocument(doc);

    const lastEnd = Math.max(
      ...doc.utterances.flatMap((u) => u.words.flatMap((w) => w.syllables.map((s) => s.end))),
    );
    // scripted playback: sample the clock every 25 ms through the stanza
    for (let t = 0; t <= lastEnd + 0.1; t += 0.025) {
      video.currentTime = t;
      player.tick();
    }

    const staticStyles = staticRenderStyles(loadGoldenMarkup());
    expect(staticStyles).toHaveLength(player.syllableSpans.length);
    player.syllableSpans.forEach((span, i) => {
      const animated = readSpanStyle(span);
      const rendered = staticStyles[i]!;
      expect(Math.abs(animated.fontWeight - rendered.fontWeight)).toBeLessThanOrEqual(
        0.01 * rendered.fontWeight,
      );
      expect(Math.abs(animated.baselineShiftEm - rendered.baselineShiftEm)).toBeLessThanOrEqual(
        0.01,
      );
      expect(Math.abs(animated.letterSpacingEm - rendered.letterSpacingEm)).toBeLessThanOrEqual(
        0.01,
      );
    });
  });

  it("styles are exactly neutral before playback and after seeking to 0", () => {
    const doc = loadFixtureDoc();
    const { player, video } = makePlayer();
    player.loadDocument(doc);
    const neutral = neutralStyle(doc);

    for (const span of player.syllableSpans) {
      expect(readSpanStyle(span)).toEqual(neutral);
    }

    video.currentTime = 3.0;
    player.tick();
    expect(player.syllableSpans.some((s) => readSpanStyle(s).fontWeight !== neutral.fontWeight)).toBe(
      true,
    );

    video.currentTime = 0;
    player.tick();
    for (const span of player.syllableSpans) {
      expect(readSpanStyle(span)).toEqual(neutral);
    }
  });
});
