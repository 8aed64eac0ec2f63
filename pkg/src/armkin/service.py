"""Stateless JSON service over the kinematics library.

Every response is assembled from plain floats rounded to 12 significant
digits, so identical requests serialize to identical bytes.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Sequence

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import ArmSpec, EndEffectorTarget, config_distance, normalize_arm
from .design import design_pair, solve
from .presets import PRESETS
from .reach import reach_closed
from .topology import block_label, classify_connectivity, path_class, state_block
from .verify import component_certificate

SCHEMA_VERSION = 1
AGREE_TOL = 1e-9


def _f(x: float) -> float:
    return float(f"{x:.12g}")


def _flist(xs: Sequence[float]) -> list[float]:
    return [_f(x) for x in xs]


def parse_lengths(raw: str) -> ArmSpec:
    try:
        vals = [float(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad lengths {raw!r}: {exc}") from None
    return ArmSpec(vals)


def arm_info_payload(spec: ArmSpec) -> dict:
    sarm = normalize_arm(spec)
    pc = path_class(sarm)
    reach = reach_closed(spec.lengths)
    return {
        "v": SCHEMA_VERSION,
        "lengths": _flist(spec.lengths),
        "sorted_lengths": _flist(sarm.lengths),
        "perm": list(sarm.perm),
        "reach": [_f(reach.lo), _f(reach.hi)],
        "path_class": pc.variant,
        "transitions": {
            letter: {"z": _f(tv.z), "reachable": tv.reachable}
            for letter, tv in pc.transitions.items()
        },
        "vital": _flist(pc.vital),
    }


def solve_payload(spec: ArmSpec, qx: float, qy: float) -> tuple[int, dict]:
    """(http status, body) for a solve request; 422 carries the reach."""
    target = EndEffectorTarget(qx, qy)
    info = arm_info_payload(spec)
    result = solve(spec, target)
    if not result.reachable:
        return 422, {
            "v": SCHEMA_VERSION,
            "error": "unreachable",
            "z": _f(result.z),
            "reach": info["reach"],
        }
    sarm = normalize_arm(spec)
    pair = design_pair(sarm)
    first, second = pair.evaluate_pair(result.z)
    agreement = config_distance(first.angles, second.angles) <= AGREE_TOL
    conn = classify_connectivity(sarm, result.z)
    cfg_a, cfg_b = result.configurations[0], result.configurations[-1]
    cert = component_certificate(spec, result.z, cfg_a, cfg_b).verdict
    body = dict(info)
    body.update(
        {
            "z": _f(result.z),
            "rho": _f(result.rho),
            "components": conn.components,
            "connectivity": conn.variant.value,
            "block": block_label(state_block(sarm, result.z)),
            "configurations": [_flist(c.angles) for c in result.configurations],
            "agreement": agreement,
            "certificate": cert,
        }
    )
    return 200, body


def create_app() -> FastAPI:
    app = FastAPI(title="armkin", docs_url=None, redoc_url=None)

    @app.get("/api/presets")
    def presets() -> JSONResponse:
        return JSONResponse(
            {
                "v": SCHEMA_VERSION,
                "presets": [
                    {"name": p["name"], "lengths": _flist(p["lengths"])}
                    for p in PRESETS
                ],
            }
        )

    @app.get("/api/arm/info")
    def arm_info(lengths: str) -> JSONResponse:
        try:
            spec = parse_lengths(lengths)
        except ValueError as exc:
            return JSONResponse({"v": SCHEMA_VERSION, "error": str(exc)}, status_code=400)
        return JSONResponse(arm_info_payload(spec))

    @app.get("/api/arm/solve")
    def arm_solve(lengths: str, qx: float, qy: float) -> JSONResponse:
        try:
            spec = parse_lengths(lengths)
            status, body = solve_payload(spec, qx, qy)
        except ValueError as exc:
            return JSONResponse({"v": SCHEMA_VERSION, "error": str(exc)}, status_code=400)
        return JSONResponse(body, status_code=status)

    ui_dir = Path(os.environ.get("ARMKIN_UI", "frontend/dist"))
    if ui_dir.is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app
