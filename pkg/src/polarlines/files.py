"""Versioned JSON formats: line-set files, point-set files, evaluation reports.

All rationals in reports are rendered as exact strings ("7" or "49/6"); no
floating point appears anywhere.
"""

from __future__ import annotations

import json

from .analysis import (
    LineSet,
    design_check,
    divisibility_report,
    dual_distribution,
    inner_distribution,
    make_lineset,
    plane_profile,
    regular_set_check,
)
from .linalg import rref
from .spaces import REL_TAGS

LINESET_VERSION = 1
POINTSET_VERSION = 1
REPORT_VERSION = 1


def _space_header(space):
    return {"family": space.family, "p": space.field.p, "h": space.field.h}


def write_lineset(space, y, path, with_bases=False):
    doc = {
        "version": LINESET_VERSION,
        "space": _space_header(space),
        "fingerprint": space.fingerprint,
        "name": y.name if isinstance(y, LineSet) else "",
        "lines": list(y.indices if isinstance(y, LineSet) else sorted(y)),
    }
    if with_bases:
        doc["bases"] = [
            [list(row) for row in space.line_basis[li]] for li in doc["lines"]
        ]
    with open(str(path), "w") as fh:
        json.dump(doc, fh)


def parse_lineset_file(path, space):
    """Load a line-set file, resolving bases through canonical RREF if needed."""
    with open(str(path)) as fh:
        doc = json.load(fh)
    if doc.get("version") != LINESET_VERSION:
        raise ValueError(f"unsupported line-set file version {doc.get('version')!r}")
    head = doc.get("space", {})
    if head != _space_header(space):
        raise ValueError(f"line-set file is for space {head}, not {_space_header(space)}")
    if doc.get("fingerprint") not in (None, space.fingerprint):
        raise ValueError("line-set file fingerprint does not match this space")
    if "bases" in doc:
        indices = []
        for rows in doc["bases"]:
            basis, _ = rref([tuple(r) for r in rows], space.field)
            key = b"".join(bytes(r) for r in basis)
            if key not in space.line_key_index:
                raise ValueError(f"basis {rows} is not a line of this space")
            indices.append(space.line_key_index[key])
        if "lines" in doc and sorted(set(indices)) != sorted(set(doc["lines"])):
            raise ValueError("line indices and bases disagree")
    else:
        indices = doc["lines"]
    return make_lineset(space, indices, name=doc.get("name", ""))


def write_pointset(space, points, path, name=""):
    doc = {
        "version": POINTSET_VERSION,
        "space": _space_header(space),
        "fingerprint": space.fingerprint,
        "name": name,
        "points": sorted(int(p) for p in points),
    }
    with open(str(path), "w") as fh:
        json.dump(doc, fh)


def parse_pointset_file(path, space):
    with open(str(path)) as fh:
        doc = json.load(fh)
    if doc.get("version") != POINTSET_VERSION:
        raise ValueError(f"unsupported point-set file version {doc.get('version')!r}")
    if doc.get("space", {}) != _space_header(space):
        raise ValueError("point-set file is for a different space")
    if doc.get("fingerprint") not in (None, space.fingerprint):
        raise ValueError("point-set file fingerprint does not match this space")
    if "vectors" in doc:
        points = []
        for v in doc["vectors"]:
            from .spaces import _normalize

            key = _normalize(space.field, tuple(int(x) for x in v))
            if key not in space.point_index:
                raise ValueError(f"vector {v} is not a point of this space")
            points.append(space.point_index[key])
    else:
        points = [int(p) for p in doc["points"]]
    bad = [p for p in points if p < 0 or p >= len(space.points)]
    if bad:
        raise ValueError(f"point indices out of range: {bad[:4]}")
    return tuple(sorted(set(points)))


def build_report(space, tables, y):
    """Full evaluation report of a line set, all values exact strings."""
    idx = y.indices if isinstance(y, LineSet) else tuple(sorted(y))
    a = inner_distribution(space, idx)
    aq = dual_distribution(space, tables, idx)
    reg = regular_set_check(space, tables, idx)
    prof = plane_profile(space, idx)
    divis = {}
    for j in REL_TAGS[1:]:
        rep = divisibility_report(len(idx), j, space.q, space.e2)
        divis[j] = {
            "consistent": rep.consistent,
            "modulus": str(rep.modulus),
            "m": str(rep.m) if rep.m is not None else None,
            "reason": rep.reason,
        }
    designs = {}
    for level in ("points", "planes"):
        d = design_check(space, tables, idx, level)
        designs[level] = {
            "is_design": d.is_design,
            "m": d.m,
            "size_formula_ok": d.size_formula_ok,
            "support_ok": d.support_ok,
        }
    return {
        "version": REPORT_VERSION,
        "space": _space_header(space),
        "fingerprint": space.fingerprint,
        "name": y.name if isinstance(y, LineSet) else "",
        "size": len(idx),
        "a": [str(v) for v in a],
        "aQ": [str(v) for v in aq],
        "support": sorted(str(t) for t in (reg.support)),
        "regular": {
            "verdict": "regular" if reg.is_regular else "not regular",
            "eigenspace": reg.eigenspace,
            "inside_degrees": list(reg.inside_degrees) if reg.inside_degrees else None,
            "outside_degrees": list(reg.outside_degrees) if reg.outside_degrees else None,
        },
        "plane_histogram": {str(k): v for k, v in sorted(prof.histogram.items())},
        "pencil_condition": prof.pencil_ok,
        "divisibility": divis,
        "design": designs,
    }
