/** DOM wiring: input box, stage inspector, canvas playback. */

import { TranslationClient, isAbort } from "./api";
import { drawFigure } from "./figure";
import { renderStagePanels } from "./panels";
import { glossAt, sample } from "./sampler";
import type { ViewerState } from "./state";
import {
  applyError,
  applyResult,
  duration,
  initialState,
  pause,
  play,
  replayGloss,
  seek,
  setSpeed,
  tick,
} from "./state";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing #${id}`);
  return el as T;
};

const input = $<HTMLTextAreaElement>("input-text");
const translateBtn = $<HTMLButtonElement>("translate");
const errorBanner = $<HTMLDivElement>("error");
const panels = $<HTMLDivElement>("panels");
const canvas = $<HTMLCanvasElement>("figure");
const subtitle = $<HTMLDivElement>("subtitle");
const playBtn = $<HTMLButtonElement>("play");
const slider = $<HTMLInputElement>("seek");
const speedSel = $<HTMLSelectElement>("speed");
const timeLabel = $<HTMLSpanElement>("time");
const facialBars = $<HTMLDivElement>("facial");

const client = new TranslationClient();
let state: ViewerState = initialState();

function setState(next: ViewerState): void {
  state = next;
  errorBanner.textContent = state.error ?? "";
  errorBanner.hidden = state.error === null;
  playBtn.disabled = duration(state) === 0;
  slider.disabled = duration(state) === 0;
  playBtn.textContent = state.playing ? "Pause" : "Play";
}

function refreshPanels(): void {
  panels.innerHTML = state.result === null ? "" : renderStagePanels(state.result);
  for (const el of panels.querySelectorAll<HTMLElement>("[data-gloss]")) {
    const gloss = el.dataset["gloss"];
    if (gloss !== undefined) {
      el.addEventListener("click", () => setState(replayGloss(state, gloss)));
    }
  }
}

async function submit(): Promise<void> {
  setState({ ...state, input: input.value });
  try {
    const doc = await client.translate(input.value);
    setState(applyResult(state, doc));
    refreshPanels();
  } catch (err) {
    if (isAbort(err)) return; // superseded by a newer request
    setState(applyError(state, err instanceof Error ? err.message : String(err)));
  }
}

translateBtn.addEventListener("click", () => void submit());
input.addEventListener("keydown", (e) => {
  if (e.key === "Enter" && !e.shiftKey) {
    e.preventDefault();
    void submit();
  }
});

playBtn.addEventListener("click", () => {
  setState(state.playing ? pause(state) : play(state));
});
slider.addEventListener("input", () => {
  const total = duration(state);
  setState(seek(state, (Number(slider.value) / 1000) * total));
});
speedSel.addEventListener("change", () => {
  setState(setSpeed(state, Number(speedSel.value)));
});

const ctx = canvas.getContext("2d");
let lastFrame = performance.now();

function frame(now: number): void {
  const dt = (now - lastFrame) / 1000;
  lastFrame = now;
  setState(tick(state, dt));

  if (state.result !== null && ctx !== null) {
    const tl = state.result.timeline;
    const pose = sample(tl, state.clock);
    drawFigure(ctx, pose, canvas.width, canvas.height);
    subtitle.textContent = glossAt(tl, state.clock) ?? "";

    const total = duration(state);
    if (!slider.matches(":active") && total > 0) {
      slider.value = String(Math.round((state.clock / total) * 1000));
    }
    timeLabel.textContent = `${state.clock.toFixed(2)} / ${total.toFixed(2)} s`;

    facialBars.innerHTML = Object.entries(pose.facial)
      .map(
        ([key, value]) =>
          `<label>${key}<meter min="0" max="1" value="${value.toFixed(3)}"></meter></label>`,
      )
      .join("");
  }
  requestAnimationFrame(frame);
}

requestAnimationFrame(frame);
