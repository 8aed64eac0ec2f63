// Canvas painting of a prepared scene, plus the info panel DOM update.

import { Scene } from "./scene.js";

export function drawScene(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  scene: Scene,
): void {
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#fafbfd";
  ctx.fillRect(0, 0, width, height);

  for (const ring of scene.annuli) {
    ctx.beginPath();
    ctx.arc(ring.center[0], ring.center[1], ring.radiusPx, 0, 2 * Math.PI);
    ctx.strokeStyle = ring.style;
    ctx.lineWidth = ring.emphasized ? 2.5 : 1.0;
    ctx.setLineDash(ring.emphasized ? [] : [5, 4]);
    ctx.stroke();
  }
  for (const ring of scene.vitalRings) {
    ctx.beginPath();
    ctx.arc(ring.center[0], ring.center[1], ring.radiusPx, 0, 2 * Math.PI);
    ctx.strokeStyle = ring.style;
    ctx.lineWidth = 1.0;
    ctx.setLineDash([2, 5]);
    ctx.stroke();
  }
  ctx.setLineDash([]);

  scene.arms.forEach((arm) => {
    ctx.beginPath();
    arm.points.forEach(([x, y], i) => {
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.strokeStyle = arm.style;
    ctx.lineWidth = 3.0;
    ctx.lineJoin = "round";
    ctx.stroke();
    for (const [x, y] of arm.points) {
      ctx.beginPath();
      ctx.arc(x, y, 3.2, 0, 2 * Math.PI);
      ctx.fillStyle = arm.style;
      ctx.fill();
    }
  });

  ctx.beginPath();
  ctx.arc(scene.base.at[0], scene.base.at[1], 5.0, 0, 2 * Math.PI);
  ctx.fillStyle = scene.base.style;
  ctx.fill();

  const [tx, ty] = scene.target.at;
  ctx.strokeStyle = scene.target.style;
  ctx.lineWidth = 1.6;
  ctx.beginPath();
  ctx.moveTo(tx - 7, ty);
  ctx.lineTo(tx + 7, ty);
  ctx.moveTo(tx, ty - 7);
  ctx.lineTo(tx, ty + 7);
  ctx.stroke();
  ctx.beginPath();
  ctx.arc(tx, ty, 4.5, 0, 2 * Math.PI);
  ctx.stroke();
}

export function renderInfoPanel(root: HTMLElement, scene: Scene): void {
  const rows: [string, string][] = [
    ["status", scene.info.status],
    ["reach", scene.info.reach],
    ["path class", scene.info.pathClass],
    ["state block", scene.info.block],
    ["components", scene.info.components],
    ["vital values", scene.info.vital],
    ["pair agreement", scene.info.agreement],
    ["certificate", scene.info.certificate],
  ];
  root.innerHTML = "";
  for (const [label, value] of rows) {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    dd.textContent = value;
    dd.dataset.field = label.replace(/ /g, "-");
    root.append(dt, dd);
  }
  const legend = document.createElement("div");
  legend.className = "legend";
  scene.arms.forEach((arm) => {
    const chip = document.createElement("span");
    chip.textContent = arm.label;
    chip.style.color = arm.style;
    legend.appendChild(chip);
  });
  root.appendChild(legend);
}
