/** Viewer state and its pure transition functions.
 *
 * Invariants kept here: the playback clock stays within [0, duration] and
 * speed is strictly positive. Every transition returns a fresh state object
 * so the render loop can diff by reference.
 */

import type { TranslationDoc } from "./types";

export interface ViewerState {
  input: string;
  result: TranslationDoc | null;
  clock: number;
  playing: boolean;
  speed: number;
  selectedGloss: string | null;
  /** When replaying a single gloss, playback pauses at this time. */
  replayUntil: number | null;
  error: string | null;
}

export function initialState(): ViewerState {
  return {
    input: "",
    result: null,
    clock: 0,
    playing: false,
    speed: 1,
    selectedGloss: null,
    replayUntil: null,
    error: null,
  };
}

export function duration(state: ViewerState): number {
  return state.result?.timeline.duration ?? 0;
}

/** A successful translation replaces the result and resets playback. */
export function applyResult(state: ViewerState, doc: TranslationDoc): ViewerState {
  return {
    ...state,
    result: doc,
    clock: 0,
    playing: false,
    selectedGloss: null,
    replayUntil: null,
    error: null,
  };
}

/** A failed request surfaces a message; the previous result is retained. */
export function applyError(state: ViewerState, message: string): ViewerState {
  return { ...state, error: message };
}

export function play(state: ViewerState): ViewerState {
  if (duration(state) === 0) return state;
  // Play from the start when the clock is parked at the end.
  const clock = state.clock >= duration(state) ? 0 : state.clock;
  return { ...state, clock, playing: true, replayUntil: null };
}

export function pause(state: ViewerState): ViewerState {
  return { ...state, playing: false };
}

export function seek(state: ViewerState, t: number): ViewerState {
  const clamped = Math.min(Math.max(t, 0), duration(state));
  return { ...state, clock: clamped, replayUntil: null };
}

export function setSpeed(state: ViewerState, speed: number): ViewerState {
  if (!Number.isFinite(speed) || speed <= 0) {
    throw new RangeError(`speed must be > 0, got ${speed}`);
  }
  return { ...state, speed };
}

/** Advance the clock by dt wall-clock seconds; stop at the end bound. */
export function tick(state: ViewerState, dt: number): ViewerState {
  if (!state.playing) return state;
  const end = state.replayUntil ?? duration(state);
  const clock = state.clock + dt * state.speed;
  if (clock >= end) {
    return { ...state, clock: end, playing: false, replayUntil: null };
  }
  return { ...state, clock };
}

/** Jump to the first clip with this gloss and play just that span. */
export function replayGloss(state: ViewerState, gloss: string): ViewerState {
  const clip = state.result?.timeline.clips.find((c) => c.gloss === gloss);
  if (clip === undefined) return state;
  return {
    ...state,
    clock: clip.start,
    playing: true,
    selectedGloss: gloss,
    replayUntil: clip.end,
  };
}
