/** Wire types for the translation service documents.
 *
 * These mirror docs/formats.md field for field; the viewer consumes the
 * serialized documents only and never reaches into server internals.
 */

export type Quat = [number, number, number, number]; // [w, x, y, z]

export interface PoseData {
  rotations: Record<string, Quat>;
  handshape_l: string;
  handshape_r: string;
  facial: Record<string, number>;
}

export interface KeyframeDoc extends PoseData {
  time: number;
}

export interface ClipDoc {
  gloss: string;
  start: number;
  end: number;
  keyframes: KeyframeDoc[];
}

export interface TimelineConfigDoc {
  default_sign_duration: number | null;
  transition: number;
  frame_rate: number;
}

export interface TimelineDoc {
  format: string;
  skeleton: string;
  config: TimelineConfigDoc;
  duration: number;
  clips: ClipDoc[];
}

export interface TokenDoc {
  text: string;
  start: number;
  end: number;
}

export interface TaggedDoc {
  text: string;
  tag: string;
  features: string[];
  matched: string | null;
}

export interface GlossDoc {
  gloss: string;
  source: "LEXICON" | "FINGERSPELL";
  token: number;
}

export interface WarningDoc {
  code: string;
  message: string;
}

export interface TranslationDoc {
  format: string;
  text: string;
  normalized: string;
  tokens: TokenDoc[];
  tagged: TaggedDoc[];
  retained: number[];
  roots: string[];
  glosses: GlossDoc[];
  warnings: WarningDoc[];
  timeline: TimelineDoc;
}
