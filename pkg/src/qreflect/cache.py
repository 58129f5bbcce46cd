"""Schema-versioned JSON persistence for the Q and P polynomial caches.

The file layout is {"schema_version": N, "q": {"b,c": <poly>}, "p":
{"b": <poly>}} with polynomials in the MultiPolyQ JSON schema.  A version
mismatch triggers a rebuild (the file is ignored) and is never silently
reused.  The QREFLECT_CACHE environment variable names the default cache
file used by the CLI when --cache is not given.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import qfamily, threedr
from .multipoly import MultiPolyQ

SCHEMA_VERSION = 1

ENV_CACHE = "QREFLECT_CACHE"


def export_cache(path: str | Path) -> int:
    """Write the in-memory Q and P caches to path; returns entry count."""
    q_entries = qfamily.cache_snapshot()
    p_entries = threedr.p_cache_snapshot()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "q": {f"{b},{c}": poly.to_json() for (b, c), poly in sorted(q_entries.items())},
        "p": {str(b): poly.to_json() for b, poly in sorted(p_entries.items())},
    }
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload), encoding="utf-8")
    return len(q_entries) + len(p_entries)


def import_cache(path: str | Path) -> int:
    """Load a cache file into memory; returns entries accepted.

    Returns 0 (and loads nothing) when the file is missing or carries a
    different schema version.
    """
    path = Path(path)
    if not path.exists():
        return 0
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return 0
    if payload.get("schema_version") != SCHEMA_VERSION:
        return 0
    q_entries = {}
    for key, data in payload.get("q", {}).items():
        b, c = (int(part) for part in key.split(","))
        q_entries[(b, c)] = MultiPolyQ.from_json(data)
    p_entries = {
        int(key): MultiPolyQ.from_json(data)
        for key, data in payload.get("p", {}).items()
    }
    qfamily.cache_install(q_entries)
    threedr.p_cache_install(p_entries)
    return len(q_entries) + len(p_entries)
