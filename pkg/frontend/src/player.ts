/** Video-synced caption player.
 *
 * Styles are recomputed from the video's current time on every animation
 * frame, so the rendered state is always a pure function of playback
 * position: pause freezes it, seeking re-derives it, and frames skipped
 * under load are simply caught up by the next sample.
 */

import { buildCaptionDom, applyStyle, type CaptionDom } from "./dom";
import { parseCaptionDoc } from "./doc";
import { buildSchedule, neutralStyle, styleAt } from "./schedule";
import type { CaptionDoc, CueEntry, StyleValues } from "./types";

export class CaptionPlayer {
  readonly video: HTMLVideoElement;
  readonly container: HTMLElement;

  private doc: CaptionDoc | null = null;
  private schedule: CueEntry[] = [];
  private neutral: StyleValues | null = null;
  private dom: CaptionDom | null = null;
  private frameHandle: number | null = null;

  constructor(video: HTMLVideoElement, container: HTMLElement) {
    this.video = video;
    this.container = container;
  }

  /** Fetch, validate, and render a caption document in its neutral state. */
  async load(captionsUrl: string): Promise<void> {
    const response = await fetch(captionsUrl);
    if (!response.ok) {
      throw new Error(`fetching ${captionsUrl} failed: HTTP ${response.status}`);
    }
    this.loadDocument(parseCaptionDoc(await response.json()));
  }

  /** Render an already-parsed document in its neutral state. */
  loadDocument(doc: CaptionDoc): void {
    this.doc = doc;
    this.schedule = buildSchedule(doc);
    this.neutral = neutralStyle(doc);
    this.container.replaceChildren();
    this.dom = buildCaptionDom(doc, this.container.ownerDocument);
    this.container.appendChild(this.dom.root);
    this.applyAt(0);
  }

  get cueCount(): number {
    return this.schedule.length;
  }

  get syllableSpans(): HTMLElement[] {
    return this.dom ? this.dom.syllableSpans : [];
  }

  /** Recompute and write every syllable's style for media time t. */
  applyAt(t: number): void {
    if (!this.dom || !this.neutral) {
      return;
    }
    for (const entry of this.schedule) {
      const span = this.dom.syllableSpans[entry.index];
      if (span) {
        applyStyle(span, styleAt(entry, t, this.neutral));
      }
    }
  }

  /** Sample the video clock once. */
  tick(): void {
    this.applyAt(this.video.currentTime);
  }

  /** Start the animation-frame sampling loop. */
  start(): void {
    if (this.frameHandle !== null) {
      return;
    }
    const step = () => {
      this.tick();
      this.frameHandle = requestAnimationFrame(step);
    };
    this.frameHandle = requestAnimationFrame(step);
  }

  stop(): void {
    if (this.frameHandle !== null) {
      cancelAnimationFrame(this.frameHandle);
      this.frameHandle = null;
    }
  }
}

/**
 * <smt-player src="video.mp4" captions="doc.smt.json" muted>
 *
 * Embeds a video element and a caption block; loads the caption document
 * from the `captions` URL and animates it in sync with playback. Load
 * failures surface as a visible error state with no partial captions.
 */
export class SmtPlayerElement extends HTMLElement {
  static observedAttributes = ["src", "captions", "muted"];

  player: CaptionPlayer | null = null;

  private video: HTMLVideoElement | null = null;
  private captionBlock: HTMLElement | null = null;
  private errorBlock: HTMLElement | null = null;

  connectedCallback(): void {
    if (!this.video) {
      this.video = this.ownerDocument.createElement("video");
      this.video.setAttribute("controls", "");
      this.captionBlock = this.ownerDocument.createElement("div");
      this.captionBlock.className = "caption-block";
      this.errorBlock = this.ownerDocument.createElement("div");
      this.errorBlock.className = "load-error";
      this.errorBlock.style.display = "none";
      this.append(this.video, this.captionBlock, this.errorBlock);
      this.player = new CaptionPlayer(this.video, this.captionBlock);
    }
    this.syncAttributes();
    this.player?.start();
  }

  disconnectedCallback(): void {
    this.player?.stop();
  }

  attributeChangedCallback(): void {
    if (this.video) {
      this.syncAttributes();
    }
  }

  private syncAttributes(): void {
    const video = this.video;
    if (!video) {
      return;
    }
    const src = this.getAttribute("src");
    if (src && video.getAttribute("src") !== src) {
      video.setAttribute("src", src);
    }
    video.muted = this.hasAttribute("muted");
    const captions = this.getAttribute("captions");
    if (captions && this.getAttribute("data-loaded-captions") !== captions) {
      this.setAttribute("data-loaded-captions", captions);
      void this.loadCaptions(captions);
    }
  }

  private async loadCaptions(url: string): Promise<void> {
    if (!this.player || !this.captionBlock || !this.errorBlock) {
      return;
    }
    try {
      await this.player.load(url);
      this.errorBlock.style.display = "none";
      this.errorBlock.textContent = "";
    } catch (error) {
      this.captionBlock.replaceChildren();
      this.errorBlock.textContent = `captions failed to load: ${String(error)}`;
      this.errorBlock.style.display = "block";
    }
  }
}

export function registerPlayerElement(): void {
  if (!customElements.get("smt-player")) {
    customElements.define("smt-player", SmtPlayerElement);
  }
}
