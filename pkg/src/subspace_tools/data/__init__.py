"""Bundled example inputs (machines, intersection matrices, filtrations)."""
from __future__ import annotations

from importlib import resources
from pathlib import Path


def bundled_names() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def read_ref(ref: str) -> tuple[str, bytes]:
    """Bytes of a JSON input given by path, bundled file name, or stem.

    A path that does not exist falls back to the bundled file with the
    same base name, so ``examples/allones4.json`` works from any directory.
    """
    p = Path(ref)
    if p.is_file():
        return str(p), p.read_bytes()
    names = bundled_names()
    for cand in (p.name, p.name + ".json", p.name.replace("-", "_") + ".json"):
        if cand in names:
            return f"bundled:{cand}", resources.files(__name__).joinpath(cand).read_bytes()
    raise FileNotFoundError(f"no file or bundled example named {ref!r} (bundled: {', '.join(names)})")
