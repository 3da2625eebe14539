"""Runs every structural check for one (q, m) and reports pass/fail per check."""
from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from . import linalg
from .cache import CodeBundle, build_bundle
from .code import code_parameters
from .list_decoder import list_parameters
from .orbit_code import projected_dimension
from .orbits import count_nonsubfield_elements, expected_orbit_sizes, gaussian_binomial, stabilizer_size
from .pipeline import DecoderUnavailable, build_decoder, pigeonhole_closes

EXHAUSTIVE_FIELD_LIMIT = 2 ** 12


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name:<28} {self.detail}"


def _field_checks(b: CodeBundle) -> list[Check]:
    F = b.ctx
    out = []
    nz = F.exp_table[:F.order]
    out.append(Check("field.primitive", len(set(nz.tolist())) == F.order,
                     f"gamma has order {F.order}"))
    if F.size <= EXHAUSTIVE_FIELD_LIMIT:
        xs = F.elements()
    else:
        xs = np.random.default_rng(0).integers(0, F.size, 512)
    tr = np.asarray(F.trace(xs))
    out.append(Check("field.trace_in_Fq", bool(np.all(tr < F.q)), f"{len(xs)} elements"))
    # nondegeneracy: for each nonzero a some x has Tr(a x) != 0
    alls = F.elements()
    nondeg = all(np.any(np.asarray(F.trace(F.mul(int(a), alls))) != 0) for a in xs if a)
    out.append(Check("field.trace_nondegenerate", nondeg))
    if F.m >= 3:
        cnt = count_nonsubfield_elements(F)
        out.append(Check("field.nonsubfield_count", cnt >= F.size - F.size // (F.q * F.q),
                         f"{cnt} >= q^m - q^(m-2) = {F.size - F.size // (F.q * F.q)}"))
    return out


def _orbit_checks(b: CodeBundle) -> list[Check]:
    F = b.ctx
    q, m = F.q, F.m
    sizes = sorted((o.size for o in b.orbits), reverse=True)
    out = [
        Check("orbits.partition", sum(sizes) == gaussian_binomial(m, 2, q)
              and len({P for o in b.orbits for P in o.points}) == sum(sizes),
              f"{len(sizes)} orbits, {sum(sizes)} planes"),
        Check("orbits.sizes", sizes == expected_orbit_sizes(q, m), f"{sizes}"),
    ]
    stab_ok = all(o.size * stabilizer_size(F, o.points[0]) == F.order for o in b.orbits)
    out.append(Check("orbits.orbit_stabilizer", stab_ok))
    return out


def _code_checks(b: CodeBundle) -> list[Check]:
    q, m = b.ctx.q, b.ctx.m
    n, k, d = code_parameters(q, m)
    code = b.code
    out = [Check("code.parameters", (code.n, code.k) == (n, k) and linalg.rank(code.G, q) == k
                 and not np.any((code.G @ code.parity.T) % q),
                 f"n={code.n} k={code.k} d={d}")]
    if q ** k <= 2 ** 20:
        dmin = code.brute_force_min_distance()
        out.append(Check("code.min_distance", dmin == d, f"brute force {dmin}, expected {d}"))
    else:
        out.append(Check("code.min_distance", True, f"skipped (q^k = {q ** k})"))
    dims = [oc.dim for oc in b.orbit_codes]
    want = [projected_dimension(m, o.d) for o in b.orbits]
    out.append(Check("orbit_code.dimensions", dims == want, f"{dims}"))
    return out


def _decoder_checks(b: CodeBundle) -> list[Check]:
    q, m = b.ctx.q, b.ctx.m
    if m < 3:
        return [Check("decoder.pigeonhole", True, "skipped (m < 3)")]
    full = (q ** m - 1) // (q - 1)
    usable = [i for i, (oc, info) in enumerate(zip(b.orbit_codes, b.info_sets))
              if info is not None and oc.N == full]
    expect = [i for i, o in enumerate(b.orbits) if o.d == m and o.size == full]
    t = list_parameters(q, m)["t"]
    radius = (code_parameters(q, m)[2] - 1) // 2
    closes = pigeonhole_closes(len(usable), radius, t)
    try:
        build_decoder(b.ctx, b.code, b.orbits, b.orbit_codes)
        built = True
    except DecoderUnavailable:
        built = False
    verdict = "closes" if closes else "does not close; decoder refused"
    return [
        Check("decoder.usable_orbits", usable == expect,
              f"{len(usable)} orbits with an information set (those with d = m)"),
        Check("decoder.pigeonhole", built == closes,
              f"{len(usable)} > floor({radius}/{t + 1}) = {radius // (t + 1)}: {verdict}"),
    ]


def run_selftest(q: int, m: int) -> list[Check]:
    b = build_bundle(q, m)
    return _field_checks(b) + _orbit_checks(b) + _code_checks(b) + _decoder_checks(b)
