// Wiring: presets, pointer, solver client, canvas and info panel.

import { Camera, fitCamera, pixelToWorld } from "./camera.js";
import { SolveClient } from "./client.js";
import { FinePointer } from "./pointer.js";
import { drawScene, renderInfoPanel } from "./render.js";
import { buildScene } from "./scene.js";
import { Preset, SolveOutcome, ViewState } from "./types.js";

const canvas = document.getElementById("workspace") as HTMLCanvasElement;
const panel = document.getElementById("info") as HTMLElement;
const presetSelect = document.getElementById("preset") as HTMLSelectElement;
const lengthsInput = document.getElementById("lengths") as HTMLInputElement;
const banner = document.getElementById("banner") as HTMLElement;

const state: ViewState = {
  lengths: [2, 2, 1],
  target: { x: 2.5, y: 1.0 },
  last: null,
  finePositioning: false,
};

let camera: Camera = fitCamera(canvas.width, canvas.height, 5);

function reachHiGuess(): number {
  return state.lengths.reduce((a, b) => a + b, 0);
}

function redraw(): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const scene = buildScene(state, camera);
  drawScene(ctx, canvas.width, canvas.height, scene);
  renderInfoPanel(panel, scene);
}

const client = new SolveClient({
  fetchJson: async (url) => {
    const resp = await fetch(url);
    return { status: resp.status, body: await resp.json() };
  },
  onResult: (outcome: SolveOutcome) => {
    banner.hidden = true;
    state.last = outcome;
    redraw();
  },
  onError: (message: string) => {
    banner.textContent = message;
    banner.hidden = false; // keep the last good frame on screen
  },
});

function requestSolve(): void {
  client.request(state.lengths, state.target.x, state.target.y);
}

function setLengths(lengths: number[]): void {
  state.lengths = lengths;
  camera = fitCamera(canvas.width, canvas.height, reachHiGuess());
  lengthsInput.value = lengths.join(",");
  requestSolve();
  redraw();
}

const pointer = new FinePointer();
let dragging = false;

function onPointer(ev: PointerEvent): void {
  const rect = canvas.getBoundingClientRect();
  const raw: [number, number] = [ev.clientX - rect.left, ev.clientY - rect.top];
  const [px, py] = pointer.move(raw[0], raw[1], ev.ctrlKey);
  state.finePositioning = ev.ctrlKey;
  const [wx, wy] = pixelToWorld(camera, px, py);
  if (wx === 0 && wy === 0) return;
  state.target = { x: wx, y: wy };
  requestSolve();
  redraw();
}

canvas.addEventListener("pointerdown", (ev) => {
  dragging = true;
  canvas.setPointerCapture(ev.pointerId);
  onPointer(ev);
});
canvas.addEventListener("pointermove", (ev) => {
  if (dragging) onPointer(ev);
});
canvas.addEventListener("pointerup", (ev) => {
  dragging = false;
  canvas.releasePointerCapture(ev.pointerId);
});

lengthsInput.addEventListener("change", () => {
  const values = lengthsInput.value
    .split(",")
    .map((tok) => Number(tok.trim()))
    .filter((v) => Number.isFinite(v) && v > 0);
  if (values.length >= 2) {
    setLengths(values);
  } else {
    banner.textContent = "need at least two positive lengths";
    banner.hidden = false;
  }
});

async function loadPresets(): Promise<void> {
  try {
    const resp = await fetch("/api/presets");
    const data = (await resp.json()) as { presets: Preset[] };
    presetSelect.innerHTML = "";
    data.presets.forEach((preset, i) => {
      const opt = document.createElement("option");
      opt.value = String(i);
      opt.textContent = preset.name;
      presetSelect.appendChild(opt);
    });
    presetSelect.addEventListener("change", () => {
      const preset = data.presets[Number(presetSelect.value)];
      if (preset) setLengths([...preset.lengths]);
    });
    const first = data.presets[2] ?? data.presets[0];
    if (first) {
      presetSelect.value = data.presets.indexOf(first).toString();
      setLengths([...first.lengths]);
    }
  } catch {
    banner.textContent = "presets unavailable; using the default arm";
    banner.hidden = false;
    setLengths(state.lengths);
  }
}

void loadPresets();
redraw();
