// Pure scene construction: view state in, drawable primitives plus info
// panel fields out. All kinematics come from the service response; this
// module only converts angles into a vertex chain for display.

import { Camera, worldToPixel } from "./camera.js";
import { SolveOutcome, ViewState } from "./types.js";

export interface Polyline {
  points: [number, number][]; // pixels, base first
  style: string; // css color
  label: string;
}

export interface Circle {
  center: [number, number];
  radiusPx: number;
  style: string;
  emphasized: boolean;
}

export interface Marker {
  at: [number, number];
  style: string;
}

export interface InfoPanel {
  status: string;
  pathClass: string;
  block: string;
  components: string;
  vital: string;
  agreement: string;
  certificate: string;
  reach: string;
}

export interface Scene {
  arms: Polyline[];
  annuli: Circle[];
  vitalRings: Circle[];
  target: Marker;
  base: Marker;
  info: InfoPanel;
}

const ARM_STYLES = ["#1f77d0", "#d05a1f"];

export function armVertices(
  lengths: number[],
  angles: number[],
): [number, number][] {
  const pts: [number, number][] = [[0, 0]];
  let x = 0;
  let y = 0;
  for (let k = 0; k < lengths.length; k++) {
    x += (lengths[k] ?? 0) * Math.cos(angles[k] ?? 0);
    y += (lengths[k] ?? 0) * Math.sin(angles[k] ?? 0);
    pts.push([x, y]);
  }
  return pts;
}

function fmt(values: number[], digits = 4): string {
  return values.map((v) => Number(v.toFixed(digits)).toString()).join(", ");
}

export function buildScene(state: ViewState, cam: Camera): Scene {
  const last: SolveOutcome | null = state.last;
  const arms: Polyline[] = [];
  const annuli: Circle[] = [];
  const vitalRings: Circle[] = [];
  const base: Marker = { at: worldToPixel(cam, 0, 0), style: "#222" };
  const target: Marker = {
    at: worldToPixel(cam, state.target.x, state.target.y),
    style: "#10a060",
  };
  let info: InfoPanel = {
    status: "waiting for the solver",
    pathClass: "-",
    block: "-",
    components: "-",
    vital: "-",
    agreement: "-",
    certificate: "-",
    reach: "-",
  };
  if (last === null) {
    return { arms, annuli, vitalRings, target, base, info };
  }

  const reach = last.body.reach;
  const emphasized = last.kind === "unreachable";
  for (const r of reach) {
    if (r > 0) {
      annuli.push({
        center: base.at,
        radiusPx: r * cam.scale,
        style: emphasized ? "#d03030" : "#b8c4d4",
        emphasized,
      });
    }
  }

  if (last.kind === "unreachable") {
    info = {
      ...info,
      status: `target unreachable (|q| = ${last.body.z.toFixed(3)})`,
      reach: `[${fmt(reach as unknown as number[], 3)}]`,
    };
    return { arms, annuli, vitalRings, target, base, info };
  }

  const body = last.body;
  for (const v of body.vital) {
    vitalRings.push({
      center: base.at,
      radiusPx: v * cam.scale,
      style: "#e3b23c",
      emphasized: false,
    });
  }
  body.configurations.forEach((angles, i) => {
    arms.push({
      points: armVertices(body.lengths, angles).map(([x, y]) =>
        worldToPixel(cam, x, y),
      ),
      style: ARM_STYLES[i % ARM_STYLES.length] ?? "#1f77d0",
      label: `component ${i + 1}`,
    });
  });
  info = {
    status: "ok",
    pathClass: body.path_class,
    block: body.block,
    components: String(body.components),
    vital: body.vital.length ? fmt(body.vital) : "none",
    agreement: body.agreement ? "yes" : "no",
    certificate: body.certificate,
    reach: `[${fmt(reach as unknown as number[], 3)}]`,
  };
  return { arms, annuli, vitalRings, target, base, info };
}
