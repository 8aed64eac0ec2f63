"""Preset arms for the CLI, service and explorer UI, one per path class."""
from __future__ import annotations

PRESETS: list[dict] = [
    {"name": "quad, gentle taper (class I)", "lengths": [3.0, 2.5, 2.5, 0.5]},
    {"name": "quad, dominant pair (class II)", "lengths": [4.0, 3.0, 2.0, 0.5]},
    {"name": "triple, matched majors (class III)", "lengths": [2.0, 2.0, 1.0]},
    {"name": "two-link elbow", "lengths": [2.0, 1.0]},
]
