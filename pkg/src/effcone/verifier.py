"""End-to-end verification of the effective cone of M_{0,6}.

Each check is independent and records a verdict plus a JSON-friendly witness;
a failing or crashing check never stops the others.  Inputs live in a
:class:`ModelData` bundle so tests can mutate them and watch checks fail.
"""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import linalg
from .cone import Cone, cones_dual_pair, dual_cone, extremal_rays, member
from .group import orbit_partition
from .moduli import tables
from .moduli.action import (
    ADJACENT_TRANSPOSITIONS, cycle_notation, s6_action_on_curves,
    s6_action_on_divisors,
)
from .moduli.generators import (
    a_label, b_label, c_relation_count, evaluate_combination, generator_tables,
    parse_combination, pushforward_check, sweep_generators,
)
from .moduli.lattice import (
    M06_CURVE, M06_DIVISOR, boundary_class, boundary_labels, canonical_class,
    fixed_class, fixed_labels, intersection_form, pairing, surface_pairing,
)
from .moduli.series import STANDARD_POINTS, line_indices, linear_series_dim
from .moduli.surfaces import (
    FSIGMA_SEMIAMPLE_ORBITS, fsigma_curve_generators, fsigma_semiample_orbits,
    m05_effective_generators, m05_nef_generators,
)


def gamma_classes() -> list:
    """15 pair boundaries, 10 triple boundaries, 15 fixed-point divisors."""
    return [boundary_class(l) for l in boundary_labels()] + [fixed_class(f) for f in fixed_labels()]


@dataclass
class ModelData:
    gamma: list
    canonical: object
    m05_sigma: list
    m05_xi: list
    fsigma_sigma: list
    fsigma_xi_orbits: list
    decompositions: dict
    table5: tuple

    @classmethod
    def default(cls) -> "ModelData":
        return cls(
            gamma=gamma_classes(),
            canonical=canonical_class(),
            m05_sigma=m05_effective_generators(),
            m05_xi=m05_nef_generators(),
            fsigma_sigma=fsigma_curve_generators(),
            fsigma_xi_orbits=fsigma_semiample_orbits(),
            decompositions=dict(tables.DECOMPOSITIONS),
            table5=tables.COEXTREMAL_TABLE,
        )


@dataclass(frozen=True)
class OrbitRow:
    index: int
    degree: int
    size: int
    representative: tuple
    members: tuple = field(default=(), repr=False, compare=False)


@dataclass
class CheckResult:
    check_id: str
    claim: str
    passed: bool
    witness: dict
    elapsed: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    checks: list

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def overall(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, timings: bool = False) -> dict:
        rows = []
        for c in self.checks:
            row = {"id": c.check_id, "claim": c.claim, "verdict": c.verdict,
                   "witness": _jsonable(c.witness)}
            if timings:
                row["elapsed_s"] = round(c.elapsed, 3)
            rows.append(row)
        return {"overall": self.overall, "checks": rows}

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True) + "\n"

    def to_table(self, timings: bool = False) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.verdict.upper():4}  {c.check_id:22}  {_summary(c.witness)}"
            if timings:
                line += f"  [{c.elapsed:.2f}s]"
            lines.append(line)
        lines.append(f"overall: {self.overall} ({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return "\n".join(lines) + "\n"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if hasattr(x, "coords"):
        return [_jsonable(v) for v in x.coords]
    return str(x)


def _summary(w: dict) -> str:
    parts = []
    for k, v in w.items():
        if isinstance(v, (int, str, bool)) and len(str(v)) < 40:
            parts.append(f"{k}={v}")
    return ", ".join(parts)


# ---------------------------------------------------------------------------
# shared computations


def _env_threads() -> int:
    try:
        return max(1, int(os.environ.get("EFFCONE_THREADS", "1")))
    except ValueError:
        return 1


class Verifier:
    """Runs checks on one :class:`ModelData`, caching the dual cone and orbits."""

    def __init__(self, data: ModelData | None = None, threads: int | None = None):
        self.data = data or ModelData.default()
        self.threads = threads if threads is not None else _env_threads()
        self._orbits = None
        self._tables = None

    @property
    def tables(self):
        if self._tables is None:
            self._tables = generator_tables()
        return self._tables

    def degree(self, ray) -> int:
        return -int(pairing(self.data.canonical, _curve(ray)))

    def coextremal_rays(self) -> list[tuple]:
        return [r for row in self.orbits() for r in row.members]

    def orbits(self) -> list[OrbitRow]:
        if self._orbits is None:
            self._orbits = compute_coextremal_orbits(self.data)
        return self._orbits


def _curve(v):
    from .cone import LatticeVector
    return v if isinstance(v, LatticeVector) else LatticeVector(tuple(v), M06_CURVE.tag)


# ---------------------------------------------------------------------------
# checks


def verify_m05_duality(data: ModelData | None = None) -> CheckResult:
    data = data or ModelData.default()
    sigma = Cone.from_rays(data.m05_sigma, 5)
    xi = Cone.from_rays([tuple(v) for v in data.m05_xi], 5)
    w = cones_dual_pair(sigma, xi, pairing=intersection_form("M05"))
    witness = {"rank": 5, "sigma": len(sigma.rays), "xi": len(xi.rays)}
    if not w:
        witness.update(side=w.side, generator=w.generator, separator=w.separator)
    return CheckResult("m05-duality", "the boundary curves and the semiample divisors of M_{0,5} "
                       "span mutually dual cones", w.is_dual, witness)


def verify_fsigma_duality(data: ModelData | None = None) -> CheckResult:
    data = data or ModelData.default()
    xi = [v for orbit in data.fsigma_xi_orbits for v in orbit]
    sizes = [len(o) for o in data.fsigma_xi_orbits]
    expected_sizes = [n for _, n in FSIGMA_SEMIAMPLE_ORBITS]
    sigma = data.fsigma_sigma
    pairings = [surface_pairing("Fsigma", x, s) for x in xi for s in sigma]
    self_int = [int(surface_pairing("Fsigma", s, s)) for s in sigma]
    w = cones_dual_pair(Cone.from_rays(sigma, 7), Cone.from_rays(xi, 7),
                        pairing=intersection_form("Fsigma"))
    witness = {"curves": len(sigma), "divisors": len(xi), "orbit_sizes": sizes,
               "pairings_checked": len(pairings), "min_pairing": min(pairings) if pairings else None,
               "minus_one_curves": self_int.count(-1), "minus_two_curves": self_int.count(-2)}
    ok = (bool(w) and sizes == expected_sizes and len(xi) == 38 and len(sigma) == 13
          and all(p >= 0 for p in pairings)
          and self_int.count(-1) == 9 and self_int.count(-2) == 4)
    if not w:
        witness.update(side=w.side, generator=w.generator, separator=w.separator)
    return CheckResult("fsigma-duality", "the 13 negative curves and the 38 semiample divisors "
                       "of the fixed-point surface span mutually dual cones", ok, witness)


def compute_coextremal_orbits(data: ModelData | None = None) -> list[OrbitRow]:
    """Extremal rays of the dual of cone(Gamma), grouped into S_6-orbits."""
    data = data or ModelData.default()
    if not data.gamma:
        raise ValueError("Gamma is empty: no divisor classes to dualize")
    dual = dual_cone(Cone.from_rays(data.gamma, M06_DIVISOR.rank))
    if dual.lineality:
        raise ValueError("dual cone is not pointed")
    rays = extremal_rays(dual).rays
    K = data.canonical

    def degree(r):
        return -int(pairing(K, _curve(r)))

    orbits = orbit_partition(rays, s6_action_on_curves(), key=degree)
    return [OrbitRow(i, degree(o.representative), o.size, o.representative, o.members)
            for i, o in enumerate(orbits, start=1)]


def check_coextremal_orbits(v: Verifier) -> CheckResult:
    rows = v.orbits()
    rays = {r for row in rows for r in row.members}
    where = {r: row for row in rows for r in row.members}
    computed = sorted((r.degree, r.size) for r in rows)
    expected = sorted((d, s) for _, d, s, _ in v.data.table5)
    contained, matched = [], set()
    for idx, d, s, rep in v.data.table5:
        row = where.get(tuple(rep))
        contained.append(row is not None and row.degree == d and row.size == s)
        if row is not None:
            matched.add(row.index)
    ok = (len(rays) == tables.COEXTREMAL_TOTAL and len(rows) == len(v.data.table5) == 25
          and computed == expected and all(contained) and len(matched) == 25
          and all(720 % r.size == 0 for r in rows)
          and sum(r.size for r in rows) == len(rays))
    witness = {"rays": len(rays), "orbits": len(rows),
               "multiset_matches": computed == expected,
               "representatives_found": sum(contained),
               "orbit_sizes": [r.size for r in rows]}
    return CheckResult("coextremal-orbits", "the dual of the cone spanned by the boundary and "
                       "fixed-point divisors has 3905 extremal rays in 25 S_6-orbits", ok, witness)


def check_ray_stability(v: Verifier) -> CheckResult:
    rays = set(v.coextremal_rays())
    act = s6_action_on_curves()
    moved = 0
    for p in ADJACENT_TRANSPOSITIONS:
        m = act.elements[p]
        for r in rays:
            if linalg.mat_vec(m, r) not in rays:
                moved += 1
    return CheckResult("ray-set-stability", "the set of coextremal rays is S_6-stable",
                       moved == 0 and bool(rays), {"rays": len(rays), "escapes": moved})


def verify_decompositions(data: ModelData | None = None, tabs=None) -> CheckResult:
    data = data or ModelData.default()
    tabs = tabs or generator_tables()
    reps = {idx: tuple(rep) for idx, _, _, rep in data.table5}
    failures = []
    for idx, expr in sorted(data.decompositions.items()):
        if any(c <= 0 for c in parse_combination(expr).values()):
            failures.append(idx)
            continue
        if evaluate_combination(expr, tabs).coords != reps.get(idx):
            failures.append(idx)
    ok = not failures and len(data.decompositions) == 25
    return CheckResult("decompositions", "each tabulated orbit representative is a positive sum of "
                       "the A, A_forget and B classes as printed", ok,
                       {"identities": len(data.decompositions), "failed": failures})


def _sweep_worker_init(gens):
    global _SWEEP_CONE
    _SWEEP_CONE = Cone(M06_CURVE.rank, tuple(gens))


def _sweep_one(ray):
    cert = member(ray, _SWEEP_CONE)
    return cert.is_member, cert.coefficients if cert.is_member else cert.separator


def membership_sweep(rays, generators: dict, threads: int = 1, hints: dict | None = None) -> dict:
    """Decompose every ray over ``generators`` (label -> vector).

    Returns a summary with merged results in input order; each certificate
    has been re-verified by substitution inside :func:`member`.
    """
    gens = [tuple(g) for g in generators.values()]
    names = {tuple(g): k for k, g in generators.items()}
    cone = Cone(M06_CURVE.rank, tuple(gens))
    rays = [tuple(r) for r in rays]
    results = []
    if threads > 1 and not hints:
        with ProcessPoolExecutor(threads, initializer=_sweep_worker_init, initargs=(gens,)) as ex:
            results = list(ex.map(_sweep_one, rays, chunksize=64))
    else:
        for r in rays:
            hint = None
            if hints and r in hints:
                hint = {tuple(generators[k]): c for k, c in hints[r].items()}
            cert = member(r, cone, hint=hint)
            results.append((cert.is_member, cert.coefficients if cert.is_member else cert.separator))
    failures = [(r, sep) for r, (ok, sep) in zip(rays, results) if not ok]
    decomps = []
    for r, (ok, coeffs) in zip(rays, results):
        if ok:
            decomps.append({names[g]: c for g, c in sorted(coeffs.items(), key=lambda kv: names[kv[0]])})
        else:
            decomps.append(None)
    return {"rays": len(rays), "members": len(rays) - len(failures),
            "failures": failures, "decompositions": decomps}


def check_membership_sweep(v: Verifier) -> CheckResult:
    rays = v.coextremal_rays()
    gens = sweep_generators(v.tables)
    res = membership_sweep(rays, gens, threads=v.threads)
    rep_set = {row.representative for row in v.orbits()}
    examples = {}
    for r, dec in zip(rays, res["decompositions"]):
        if r in rep_set and dec is not None:
            examples[" ".join(map(str, r))] = " + ".join(
                f"{c}*{k}" if c != 1 else k for k, c in dec.items())
    ok = res["members"] == res["rays"] == tables.COEXTREMAL_TOTAL and len(gens) == 95
    witness = {"rays": res["rays"], "members": res["members"], "generators": len(gens),
               "farkas_failures": len(res["failures"]),
               "failures": [{"ray": r, "separator": s} for r, s in res["failures"]],
               "representative_decompositions": examples}
    return CheckResult("membership-sweep", "every coextremal ray is a nonnegative combination "
                       "of the A, A_forget and B classes", ok, witness)


def check_boundary_span(v: Verifier) -> CheckResult:
    classes = [tuple(boundary_class(l)) for l in boundary_labels()]
    rk = linalg.rank(classes)
    units = sum(1 for c in classes if sorted(c) == [0] * 15 + [1])
    return CheckResult("boundary-span", "the 25 boundary classes span the divisor lattice and "
                       "15 of them are basis vectors", rk == 16 and units == 15,
                       {"rank": rk, "unit_vectors": units})


def check_s6_action(v: Verifier) -> CheckResult:
    act = s6_action_on_divisors()
    ident = linalg.identity(16)
    dets = {int(linalg.determinant(m)) for m in act.elements.values()}
    gens = [act.elements[p] for p in ADJACENT_TRANSPOSITIONS]
    relations = 0
    bad = []

    def power_is_identity(m, k):
        acc = ident
        for _ in range(k):
            acc = linalg.mat_mul(acc, m)
        return acc == ident

    for i, s in enumerate(gens):
        relations += 1
        if not power_is_identity(s, 2):
            bad.append(f"s{i+1}^2")
        for j in range(i + 1, len(gens)):
            order = 3 if j == i + 1 else 2
            relations += 1
            if not power_is_identity(linalg.mat_mul(s, gens[j]), order):
                bad.append(f"(s{i+1}s{j+1})^{order}")
    ok = act.order == 720 and dets <= {1, -1} and not bad
    return CheckResult("s6-action", "S_6 acts on the divisor lattice by unimodular matrices "
                       "satisfying the Coxeter relations", ok,
                       {"order": act.order, "determinants": sorted(dets),
                        "coxeter_relations": relations, "failed_relations": bad})


def check_divisor_equivariance(v: Verifier) -> CheckResult:
    act = s6_action_on_divisors()
    labels = boundary_labels()
    flabels = fixed_labels()
    bvec = {l: tuple(boundary_class(l)) for l in labels}
    fvec = {f: tuple(fixed_class(f)) for f in flabels}
    checks, bad = 0, []
    for p, m in act.elements.items():
        for l in labels:
            checks += 1
            if linalg.mat_vec(m, bvec[l]) != bvec[l.permute(p)]:
                bad.append(f"{cycle_notation(p)} on {l}")
        for f in flabels:
            checks += 1
            if linalg.mat_vec(m, fvec[f]) != fvec[f.conjugate(p)]:
                bad.append(f"{cycle_notation(p)} on {f}")
    return CheckResult("divisor-equivariance", "the action permutes boundary and fixed-point "
                       "divisor classes as it permutes their labels", not bad and checks == 720 * 40,
                       {"checks": checks, "failures": bad[:10]})


def check_curve_equivariance(v: Verifier) -> CheckResult:
    act = s6_action_on_curves()
    tabs = v.tables
    entries = {}
    for fam in ("A", "A_forget", "B"):
        entries.update({k: tuple(x) for k, x in tabs[fam].entries.items()})

    def image_label(label, p):
        body = label[2:]
        if label.startswith("B_"):
            return b_label(*(p[int(c) - 1] for c in body))
        if ";" in body:
            ij, k = body.split(";")
            return a_label(p[int(ij[0]) - 1], p[int(ij[1]) - 1], p[int(k) - 1])
        return a_label(p[int(body[0]) - 1], p[int(body[1]) - 1])

    checks, bad = 0, []
    for p, m in act.elements.items():
        for label, vec in entries.items():
            checks += 1
            if linalg.mat_vec(m, vec) != entries[image_label(label, p)]:
                bad.append(f"{cycle_notation(p)} on {label}")
    # the pairing is preserved by the pair of actions
    rng = random.Random(20240601)
    dact = s6_action_on_divisors()
    pair_bad = 0
    for p in ADJACENT_TRANSPOSITIONS:
        for _ in range(20):
            D = tuple(rng.randint(-5, 5) for _ in range(16))
            rho = tuple(rng.randint(-5, 5) for _ in range(16))
            if linalg.dot(linalg.mat_vec(dact.elements[p], D), linalg.mat_vec(act.elements[p], rho)) \
                    != linalg.dot(D, rho):
                pair_bad += 1
    ok = not bad and checks == 720 * 95 and pair_bad == 0
    return CheckResult("curve-equivariance", "the contragredient action permutes the 95 curve "
                       "classes by their labels and preserves the pairing", ok,
                       {"checks": checks, "failures": bad[:10], "pairing_failures": pair_bad})


def check_generator_tables(v: Verifier) -> CheckResult:
    try:
        tabs = generator_tables()
    except Exception as exc:  # TableInconsistent
        return CheckResult("generator-tables", "C classes follow from A + B independent of k",
                           False, {"error": str(exc)})
    sizes = {k: len(t) for k, t in tabs.items()}
    expected = {"B": 20, "A": 15, "A_forget": 60, "C": 15, "C_blowdown": 60}
    primitive_ok = all(linalg.primitive(x.coords) == x.coords
                       for t in tabs.values() for x in t.vectors())
    counts = c_relation_count(tabs)
    ok = sizes == expected and primitive_ok and counts["nm1_dij_classes"] == 150
    return CheckResult("generator-tables", "the C classes follow from A + B independent of k, "
                       "and the D_45 classes match their table", ok,
                       {**sizes, **counts, "d45_rows": len(tables.D45_TABLE), "primitive": primitive_ok})


def check_pushforward(v: Verifier) -> CheckResult:
    try:
        res = pushforward_check()
    except Exception as exc:  # PushforwardMismatch
        return CheckResult("pushforward", "the printed pushforward matrices reproduce the tables",
                           False, {"error": str(exc)})
    return CheckResult("pushforward", "the printed pushforward matrices reproduce the tables", True,
                       {"j345_columns": "B_126 B_345", "j45_orderings": res["j45"]["orderings"],
                        "j45_ordering": res["j45"]["ordering"]})


def check_degree_column(v: Verifier) -> CheckResult:
    bad = [idx for idx, d, _, rep in v.data.table5 if v.degree(rep) != d]
    return CheckResult("degree-column", "the adopted canonical class reproduces the tabulated anticanonical degrees",
                       not bad, {"rows": len(v.data.table5), "failed": bad})


def check_linear_series(v: Verifier) -> CheckResult:
    simple = [(p, 1) for p in STANDARD_POINTS]
    double = [(p, 2) for p in STANDARD_POINTS]
    cubic = linear_series_dim(3, simple, line_indices([(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)]))
    quadric = linear_series_dim(2, simple)
    quartic = linear_series_dim(4, double, line_indices(combinations(range(1, 6), 2)))
    ok = (cubic, quadric, quartic) == (2, 4, 4)
    return CheckResult("linear-series", "dimensions of the conic-bundle cubics, the quadrics "
                       "through five points, and the anticanonical quartics", ok,
                       {"cubic": cubic, "quadric": quadric, "quartic": quartic})


def _wrap(check_id: str, fn: Callable[[], CheckResult]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        res = fn()
    except Exception as exc:
        res = CheckResult(check_id, "precondition", False, {"error": f"{type(exc).__name__}: {exc}"})
    res.elapsed = time.perf_counter() - t0
    return res


CHECK_IDS = (
    "m05-duality", "fsigma-duality", "boundary-span", "s6-action", "divisor-equivariance",
    "curve-equivariance", "generator-tables", "pushforward", "degree-column", "linear-series",
    "decompositions", "coextremal-orbits", "ray-set-stability", "membership-sweep",
)


def _dispatch(v: Verifier) -> dict[str, Callable[[], CheckResult]]:
    return {
        "m05-duality": lambda: verify_m05_duality(v.data),
        "fsigma-duality": lambda: verify_fsigma_duality(v.data),
        "boundary-span": lambda: check_boundary_span(v),
        "s6-action": lambda: check_s6_action(v),
        "divisor-equivariance": lambda: check_divisor_equivariance(v),
        "curve-equivariance": lambda: check_curve_equivariance(v),
        "generator-tables": lambda: check_generator_tables(v),
        "pushforward": lambda: check_pushforward(v),
        "degree-column": lambda: check_degree_column(v),
        "linear-series": lambda: check_linear_series(v),
        "decompositions": lambda: verify_decompositions(v.data, v.tables),
        "coextremal-orbits": lambda: check_coextremal_orbits(v),
        "ray-set-stability": lambda: check_ray_stability(v),
        "membership-sweep": lambda: check_membership_sweep(v),
    }


def run_check(check_id: str, data: ModelData | None = None, verifier: Verifier | None = None) -> CheckResult:
    v = verifier or Verifier(data)
    table = _dispatch(v)
    if check_id not in table:
        raise KeyError(f"unknown check {check_id!r}; choose from {', '.join(CHECK_IDS)}")
    return _wrap(check_id, table[check_id])


def full_report(data: ModelData | None = None, checks=None, threads: int | None = None) -> VerificationReport:
    v = Verifier(data, threads=threads)
    table = _dispatch(v)
    ids = CHECK_IDS if checks is None else checks
    return VerificationReport([_wrap(cid, table[cid]) for cid in ids])


def with_changes(**changes) -> ModelData:
    """Default inputs with some fields replaced (mutation controls)."""
    return replace(ModelData.default(), **changes)
