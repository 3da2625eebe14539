"""JSON cache of a built code: orbit table, matrices, info sets, orbit codes."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .code import LinearCode, build_code, matrix_from_json
from .field import BigFieldCtx, UnsupportedParameters, build_field
from .orbit_code import OrbitCode, build_orbit_code
from .orbits import Orbit, Plane, factory, orbit_decompose

FORMAT_VERSION = 1


class CacheError(ValueError):
    pass


@dataclass
class CodeBundle:
    ctx: BigFieldCtx = field(repr=False)
    orbits: list[Orbit] = field(repr=False)
    code: LinearCode = field(repr=False)
    orbit_codes: list[OrbitCode] = field(repr=False)
    info_sets: list[list[int] | None]


def build_bundle(q: int, m: int) -> CodeBundle:
    if m < 2:
        raise UnsupportedParameters(f"G(2, {m}) is empty")
    ctx = build_field(q, m)
    orbits = orbit_decompose(ctx)
    code = build_code(ctx, orbits)
    ocs = [build_orbit_code(ctx, code, o) for o in orbits]
    info = [code.find_information_set(oc.columns) for oc in ocs]
    return CodeBundle(ctx, orbits, code, ocs, info)


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def bundle_to_json(b: CodeBundle) -> dict:
    payload = {
        "format_version": FORMAT_VERSION,
        "q": b.ctx.q,
        "m": b.ctx.m,
        "modulus": format(b.ctx.modulus, "x"),
        "n": b.code.n,
        "k": b.code.k,
        "orbits": [o.to_json() for o in b.orbits],
        **b.code.to_json(),
        "info_sets": [None if s is None else list(s) for s in b.info_sets],
        "orbit_codes": [oc.to_json() for oc in b.orbit_codes],
    }
    return {**payload, "checksum": _checksum(payload)}


def save_cache(b: CodeBundle, path) -> None:
    Path(path).write_text(json.dumps(bundle_to_json(b), sort_keys=True))


def bundle_from_json(doc: dict) -> CodeBundle:
    doc = dict(doc)
    checksum = doc.pop("checksum", None)
    if checksum != _checksum(doc):
        raise CacheError("cache checksum mismatch")
    if doc.get("format_version") != FORMAT_VERSION:
        raise CacheError(f"unsupported cache format {doc.get('format_version')!r}")
    ctx = build_field(doc["q"], doc["m"])
    if format(ctx.modulus, "x") != doc["modulus"]:
        raise CacheError("cache was written with a different field modulus")
    fac = factory(ctx)
    orbits = []
    for o in doc["orbits"]:
        pts = [Plane(fac._from_packed[k0], fac._from_packed[k1], (k0, k1)) for k0, k1 in o["points"]]
        orbits.append(Orbit(int(o["delta"], 16), o["delta_log"], o["d"], pts))
    q, n = doc["q"], doc["n"]
    G = matrix_from_json(doc["generator"], q, n)
    code = LinearCode(q, G, [P for o in orbits for P in o.points])
    if not np.array_equal(code.parity, matrix_from_json(doc["parity"], q, n)):
        raise CacheError("parity-check matrix does not match the generator")
    ocs = []
    for o, meta in zip(orbits, doc["orbit_codes"]):
        oc = build_orbit_code(ctx, code, o)
        if oc.dim != meta["dim"] or sorted(oc.allowed_exponents) != meta["allowed_exponents"]:
            raise CacheError(f"orbit code for delta_log={o.delta_log} does not match the cache")
        ocs.append(oc)
    info = [None if s is None else list(s) for s in doc["info_sets"]]
    return CodeBundle(ctx, orbits, code, ocs, info)


def load_cache(path) -> CodeBundle:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise CacheError(f"{path}: not valid JSON ({e})") from None
    return bundle_from_json(doc)
