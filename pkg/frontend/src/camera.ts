// Workspace <-> pixel transform. The workspace is a square centred on the
// arm base, sized to the outer reach circle plus a small margin; pixel y
// grows downward while workspace y grows upward.

export interface Camera {
  scale: number; // pixels per workspace unit
  cx: number; // pixel position of the base
  cy: number;
}

export function fitCamera(
  widthPx: number,
  heightPx: number,
  reachHi: number,
  margin = 1.08,
): Camera {
  const scale = Math.min(widthPx, heightPx) / (2 * reachHi * margin);
  return { scale, cx: widthPx / 2, cy: heightPx / 2 };
}

export function worldToPixel(cam: Camera, x: number, y: number): [number, number] {
  return [cam.cx + x * cam.scale, cam.cy - y * cam.scale];
}

export function pixelToWorld(cam: Camera, px: number, py: number): [number, number] {
  return [(px - cam.cx) / cam.scale, (cam.cy - py) / cam.scale];
}
