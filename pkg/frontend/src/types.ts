// Wire types of the kinematics service (schema v1).

export interface TransitionEntry {
  z: number;
  reachable: boolean;
}

export interface ArmInfo {
  v: number;
  lengths: number[];
  sorted_lengths: number[];
  perm: number[];
  reach: [number, number];
  path_class: string;
  transitions: Record<string, TransitionEntry>;
  vital: number[];
}

export interface SolveResponse extends ArmInfo {
  z: number;
  rho: number;
  components: number;
  connectivity: string;
  block: string;
  configurations: number[][];
  agreement: boolean;
  certificate: string;
}

export interface UnreachableResponse {
  v: number;
  error: "unreachable";
  z: number;
  reach: [number, number];
}

export interface Preset {
  name: string;
  lengths: number[];
}

export type SolveOutcome =
  | { kind: "solved"; body: SolveResponse }
  | { kind: "unreachable"; body: UnreachableResponse };

export interface ViewState {
  lengths: number[];
  target: { x: number; y: number };
  last: SolveOutcome | null;
  finePositioning: boolean;
}
