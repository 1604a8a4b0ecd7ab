"""Sweep harness re-deriving every classification by independent enumeration.

Each cell (g, d) runs a set of named checks that compare the closed-form
operations against exhaustive box enumeration and against each other.
Cells are pure functions of (g, d, box_radius), so the sweep can run at
any parallelism and always produces the same report; results are merged
in (g, d, check_id) order.  A failing check always carries a replayable
certificate listing the offending classes with their full cohomology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterator, Optional

from .lattice import (
    F,
    H,
    DivClass,
    PolarizedLattice,
    deg_h,
    elliptic_pencil_classes,
    intersect,
    is_nef,
    is_primitive,
    minus_two_classes,
    square,
)
from .cohomology import cohomology, h0, positivity
from .clifford import clifford_index
from .acm import classify_acm_initialized
from .lm import (
    PencilMarker,
    StabilityTag,
    InvalidMarkerError,
    destabilizer_search,
    gonality_pencil_classes,
    lm_invariants,
    stability_classify,
)

ALL_CHECKS = (
    "acm_classification",
    "bpf_H_minus_F",
    "cliff",
    "cohomology_identities",
    "elliptic_pencils",
    "gonality_pencils",
    "minus_two",
    "stability",
    "very_ample_H",
)


@dataclass(frozen=True)
class SweepConfig:
    g_max: int
    box_radius: int = 10
    checks: frozenset[str] = frozenset(ALL_CHECKS)
    parallelism: int = 1

    def __post_init__(self):
        if self.g_max < 3:
            raise ValueError("g_max must be at least 3")
        if self.box_radius < 2:
            raise ValueError("box_radius must be at least 2")
        if self.parallelism < 0:
            raise ValueError("parallelism must be nonnegative (0 = auto)")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    g: int
    d: int
    passed: bool
    certificate: Optional[dict] = None


def valid_pairs(g_max: int) -> Iterator[tuple[int, int]]:
    for g in range(3, g_max + 1):
        for d in range(3, (g + 3) // 2 + 1):
            yield g, d


def _class_payload(lat, c: DivClass) -> dict:
    v = cohomology(lat, c)
    return {"class": [c.n, c.m], "h0": v.h0, "h1": v.h1, "h2": v.h2, "chi": v.chi}


def _box(radius) -> Iterator[DivClass]:
    for n in range(-radius, radius + 1):
        for m in range(-radius, radius + 1):
            yield DivClass(n, m)


def _check_minus_two(lat, radius):
    found = sorted(c for c in _box(radius) if square(lat, c) == -2)
    mt = minus_two_classes(lat)
    if (mt is not None) != (lat.g % lat.d == 0):
        return False, {"detail": "existence disagrees with divisibility"}
    if mt is None:
        if found:
            return False, {"classes": [_class_payload(lat, c) for c in found]}
        return True, None
    gamma, neg = mt
    expected = sorted(c for c in (gamma, neg) if abs(c.n) <= radius and abs(c.m) <= radius)
    ok = (
        found == expected
        and gamma == H - (lat.g // lat.d) * F
        and square(lat, gamma) == -2
        and deg_h(lat, gamma) > 0
    )
    cert = {"classes": [_class_payload(lat, gamma)]}
    if not ok:
        cert["found"] = [[c.n, c.m] for c in found]
    return ok, cert


def _check_elliptic_pencils(lat, radius):
    pencils = elliptic_pencil_classes(lat)
    for p in pencils:
        if square(lat, p) != 0 or deg_h(lat, p) <= 0:
            return False, {"classes": [_class_payload(lat, p)]}
        if not is_primitive(p) or not is_nef(lat, p):
            return False, {"classes": [_class_payload(lat, p)]}
    if len(pencils) > 1:
        # the second pencil satisfies n(g-1) = lcm(g-1, d)
        r = pencils[1]
        if r.n * (lat.g - 1) != math.lcm(lat.g - 1, lat.d):
            return False, {"classes": [_class_payload(lat, r)]}
    found = sorted(
        c
        for c in _box(radius)
        if square(lat, c) == 0
        and deg_h(lat, c) > 0
        and is_primitive(c)
        and is_nef(lat, c)
    )
    if found != sorted(p for p in pencils if abs(p.n) <= radius and abs(p.m) <= radius):
        return False, {"found": [[c.n, c.m] for c in found]}
    return True, None


def _check_very_ample_H(lat, radius):
    if positivity(lat, H).very_ample:
        return True, None
    return False, {"classes": [_class_payload(lat, H)]}


def _check_bpf_H_minus_F(lat, radius):
    if positivity(lat, H - F).base_point_free:
        return True, None
    return False, {"classes": [_class_payload(lat, H - F)]}


def _check_cliff(lat, radius):
    rep = clifford_index(lat)
    cert = {
        "value": rep.cliff,
        "mu": rep.mu,
        "generic_bound": rep.generic_bound,
        "a0_classes": [[c.n, c.m] for c in rep.a0_classes],
    }
    return rep.cliff == lat.d - 2, cert


def _check_acm_classification(lat, radius):
    got = classify_acm_initialized(lat, radius)
    expected = {F, H - F}
    extra = [c for c in got if c not in expected]
    if extra:
        return False, {"classes": [_class_payload(lat, c) for c in extra]}
    missing = sorted(expected - set(got))
    if missing:
        return True, {"missing": [[c.n, c.m] for c in missing]}
    return True, None


def _check_stability(lat, radius):
    g, d = lat.g, lat.d
    search = destabilizer_search(lat)
    by_f = stability_classify(lat, PencilMarker.CUT_BY_F)
    if sorted(by_f.witnesses) != search:
        return False, {
            "search": [_class_payload(lat, c) for c in search],
            "witnesses": [[c.n, c.m] for c in by_f.witnesses],
        }
    if stability_classify(lat, PencilMarker.OTHER).tag is not StabilityTag.STABLE:
        return False, {"detail": "marker OTHER must be stable"}
    if d == g:
        ok = by_f.tag is StabilityTag.STABLE and not search
    elif d == g - 1:
        ok = (
            by_f.tag is StabilityTag.STRICTLY_SEMISTABLE
            and all(deg_h(lat, m) == g - 1 for m in search)
            and len(search) > 0
            and stability_classify(lat, PencilMarker.CUT_BY_H_MINUS_F).tag
            is StabilityTag.STRICTLY_SEMISTABLE
        )
    else:
        ok = (
            by_f.tag is StabilityTag.UNSTABLE
            and search == [H - F]
            and deg_h(lat, H - F) == 2 * g - 2 - d > g - 1
        )
        try:
            stability_classify(lat, PencilMarker.CUT_BY_H_MINUS_F)
            ok = False
        except InvalidMarkerError:
            pass
    if ok:
        return True, None
    return False, {"search": [_class_payload(lat, c) for c in search], "tag": by_f.tag.value}


def _check_gonality_pencils(lat, radius):
    got = gonality_pencil_classes(lat)
    want = 2 if lat.d == lat.g - 1 else 1
    ok = len(got) == want and all(deg_h(lat, p) == lat.d for p in got)
    if ok and (lat.g, lat.d) == (4, 3):
        ok = set(got) == {F, H - F}
    cert = {"classes": [[c.n, c.m] for c in got]}
    return ok, cert


def _check_cohomology_identities(lat, radius):
    for c in _box(radius):
        v = cohomology(lat, c)  # raises InvariantError if h1 < 0
        if v.h2 != h0(lat, -c) or v.h0 - v.h1 + v.h2 != square(lat, c) // 2 + 2:
            return False, {"classes": [_class_payload(lat, c)]}
    if h0(lat, H) != lat.g + 1:
        return False, {"classes": [_class_payload(lat, H)]}
    if lm_invariants(lat).h0 != lat.g + 3 - lat.d:
        return False, {"detail": "rank-2 Euler characteristic mismatch"}
    return True, None


_CHECK_FUNCS = {
    "acm_classification": _check_acm_classification,
    "bpf_H_minus_F": _check_bpf_H_minus_F,
    "cliff": _check_cliff,
    "cohomology_identities": _check_cohomology_identities,
    "elliptic_pencils": _check_elliptic_pencils,
    "gonality_pencils": _check_gonality_pencils,
    "minus_two": _check_minus_two,
    "stability": _check_stability,
    "very_ample_H": _check_very_ample_H,
}


def _run_cell(task) -> list[CheckResult]:
    g, d, radius, check_ids = task
    lat = PolarizedLattice(g, d)
    results = []
    for check_id in check_ids:
        if check_id == "bpf_H_minus_F" and d > g - 1:
            continue  # H-F is not effective there
        try:
            passed, cert = _CHECK_FUNCS[check_id](lat, radius)
        except OverflowError:
            passed, cert = False, {"error": "overflow"}
        results.append(CheckResult(check_id, g, d, passed, cert))
    return results


def run_sweep(cfg: SweepConfig) -> list[CheckResult]:
    check_ids = tuple(sorted(cfg.checks))
    tasks = [(g, d, cfg.box_radius, check_ids) for g, d in valid_pairs(cfg.g_max)]
    if cfg.parallelism == 1:
        per_cell = [_run_cell(t) for t in tasks]
    else:
        procs = cfg.parallelism or None
        with get_context("fork").Pool(processes=procs) as pool:
            per_cell = pool.map(_run_cell, tasks)
    results = [r for cell in per_cell for r in cell]
    results.sort(key=lambda r: (r.g, r.d, r.check_id))
    return results
