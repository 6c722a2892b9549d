"""Shared output formatting: fixed significant digits and window JSON.

All file outputs round through round_sig so that CSV and JSON encode
identical numbers and reruns are byte-identical.
"""

from __future__ import annotations

import json

from .fockspace import Window

SIG_DIGITS = 12


def round_sig(x: float, digits: int = SIG_DIGITS) -> float:
    """Round to a fixed number of significant digits via decimal text."""
    return float(f"{float(x):.{digits}g}")


def format_sig(x: float, digits: int = SIG_DIGITS) -> str:
    return f"{float(x):.{digits}g}"


def window_to_json_dict(window: Window) -> dict:
    return {
        "lo": window.lo,
        "hi": window.hi,
        "boundary": window.boundary.value,
        "wrap_phase": round_sig(window.wrap_phase),
    }


def dump_json(obj) -> str:
    """Canonical JSON rendering used for every JSON output."""
    return json.dumps(obj, indent=2) + "\n"
