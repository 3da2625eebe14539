"""Orbit-projection decoder for C(2, m).

Every full orbit whose columns contain an information set is list-decoded;
each candidate projection is re-encoded through that information set and the
codeword closest to the received word wins.  Unique decoding up to
floor((d-1)/2) errors holds when some usable orbit always carries at most t
errors, which is checked once in build_decoder.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .code import LinearCode, build_code, code_parameters
from .field import BigFieldCtx, build_field
from .list_decoder import OrbitListDecoder, list_parameters
from .orbit_code import OrbitCode, build_orbit_code
from .orbits import Orbit, orbit_decompose

log = logging.getLogger(__name__)


class DecoderUnavailable(RuntimeError):
    """The pigeonhole argument does not close for these parameters."""


@dataclass
class Decoder:
    """DecoderContext: everything decode() needs, immutable once built."""
    ctx: BigFieldCtx = field(repr=False)
    code: LinearCode = field(repr=False)
    orbits: list[Orbit] = field(repr=False)
    orbit_codes: list[OrbitCode] = field(repr=False)
    info_sets: list[list[int] | None]
    radius: int
    per_orbit_t: int
    usable: list[int]                           # orbit indices that get list-decoded
    list_decoders: dict[int, OrbitListDecoder] = field(repr=False)

    @property
    def q(self) -> int:
        return self.ctx.q


@dataclass
class CandidateRecord:
    orbit: int
    b: int
    index: int
    codeword: np.ndarray = field(repr=False)
    distance: int


@dataclass
class DecodeResult:
    success: bool
    codeword: np.ndarray | None
    distance: int | None
    winner_orbit: int | None = None
    winner_b: int | None = None
    list_sizes: dict[int, int] = field(default_factory=dict)
    rejected: dict[int, int] = field(default_factory=dict)
    orbit_errors: dict[int, int] = field(default_factory=dict)
    candidates: list[CandidateRecord] = field(default_factory=list, repr=False)

    @property
    def total_candidates(self) -> int:
        return sum(self.list_sizes.values())

    def diagnostics(self) -> dict:
        out = {
            "success": self.success,
            "distance": self.distance,
            "winner_orbit": self.winner_orbit,
            "winner_b": self.winner_b,
            "list_sizes": {str(k): v for k, v in self.list_sizes.items()},
            "rejected": {str(k): v for k, v in self.rejected.items()},
            "orbit_errors": {str(k): v for k, v in self.orbit_errors.items()},
            "total_candidates": self.total_candidates,
        }
        if not self.success:
            out["candidates"] = [
                {"orbit": c.orbit, "b": c.b, "distance": c.distance,
                 "codeword": "".join(map(str, c.codeword.tolist()))}
                for c in self.candidates
            ]
        return out


def pigeonhole_closes(n_usable: int, radius: int, t: int) -> bool:
    """True iff any radius errors leave some usable orbit with at most t of them."""
    return n_usable > radius // (t + 1)


def build_decoder(ctx: BigFieldCtx, code: LinearCode | None = None,
                  orbits: list[Orbit] | None = None,
                  orbit_codes: list[OrbitCode] | None = None) -> Decoder:
    q, m = ctx.q, ctx.m
    if m < 3:
        raise DecoderUnavailable(f"m = {m}: the orbit decoder needs m >= 3")
    if orbits is None:
        orbits = orbit_decompose(ctx)
    if code is None:
        code = build_code(ctx, orbits)
    if orbit_codes is None:
        orbit_codes = [build_orbit_code(ctx, code, o) for o in orbits]
    _, _, d = code_parameters(q, m)
    radius = (d - 1) // 2
    t = list_parameters(q, m)["t"]

    info_sets = []
    usable = []
    for idx, oc in enumerate(orbit_codes):
        info = code.find_information_set(oc.columns)
        info_sets.append(info)
        if info is not None and oc.is_full():
            usable.append(idx)
    log.info("C(2,%d) over F_%d: %d of %d orbits usable, t=%d, radius=%d",
             m, q, len(usable), len(orbits), t, radius)
    if not pigeonhole_closes(len(usable), radius, t):
        raise DecoderUnavailable(
            f"(q, m) = ({q}, {m}): {len(usable)} usable orbits with per-orbit radius {t} "
            f"cannot absorb {radius} errors (need more than {radius // (t + 1)})")
    decoders = {idx: OrbitListDecoder(orbit_codes[idx]) for idx in usable}
    return Decoder(ctx, code, orbits, orbit_codes, info_sets, radius, t, usable, decoders)


def build(q: int, m: int) -> Decoder:
    return build_decoder(build_field(q, m))


def decoder_from_bundle(bundle) -> Decoder:
    return build_decoder(bundle.ctx, bundle.code, bundle.orbits, bundle.orbit_codes)


def decode(dec: Decoder, r, fast: bool = False) -> DecodeResult:
    """Decode a received word (orbit-major coordinate order)."""
    code = dec.code
    r = np.asarray(r, dtype=np.int64)
    if r.shape != (code.n,):
        raise ValueError(f"received word has length {r.size}, expected {code.n}")
    if np.any((r < 0) | (r >= dec.q)):
        raise ValueError(f"received word has symbols outside F_{dec.q}")
    result = DecodeResult(False, None, None)
    best = None
    for idx in dec.usable:
        oc = dec.orbit_codes[idx]
        listed = dec.list_decoders[idx].decode(r[oc.columns])
        result.list_sizes[idx] = len(listed)
        result.rejected[idx] = listed.rejected
        info = dec.info_sets[idx]
        local = {pos: i for i, pos in enumerate(oc.columns)}
        for j, ((word, _), b) in enumerate(zip(listed.candidates, listed.b_hits)):
            values = word[[local[pos] for pos in info]]
            c = code.reencode_from_info_set(info, values)
            dist = int(np.count_nonzero(c != r))
            rec = CandidateRecord(idx, b, j, c, dist)
            result.candidates.append(rec)
            if best is None or dist < best.distance:
                best = rec
        if fast and best is not None and best.distance <= dec.radius:
            break
    if best is not None:
        result.codeword = best.codeword
        result.distance = best.distance
        result.winner_orbit = best.orbit
        result.winner_b = best.b
        result.success = best.distance <= dec.radius
        for idx, oc in enumerate(dec.orbit_codes):
            result.orbit_errors[idx] = int(np.count_nonzero(best.codeword[oc.columns] != r[oc.columns]))
    if result.success:
        result.candidates = []
    return result


def error_orbit_profile(dec: Decoder, e_support) -> tuple[dict[int, int], int]:
    """Errors per orbit and the first usable orbit holding at most t of them."""
    support = set(int(s) for s in e_support)
    if len(support) > dec.radius:
        raise ValueError(f"{len(support)} errors exceed the decoding radius {dec.radius}")
    counts = {idx: len(support.intersection(oc.columns)) for idx, oc in enumerate(dec.orbit_codes)}
    witness = next((idx for idx in dec.usable if counts[idx] <= dec.per_orbit_t), None)
    if witness is None:
        raise AssertionError("pigeonhole invariant violated")
    return counts, witness
