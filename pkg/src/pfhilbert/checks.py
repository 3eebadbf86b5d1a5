"""Cross-verification of every formula route against the others and against
the combinatorial oracles.  Backs ``pfhilbert verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from . import hilbert, multiplicity, paths, pfaffian
from .exact_arith import binomial
from .params import FULL_POLYNOMIAL, RingParams, grid

# Every operation of the pfaffian, paths, hilbert and multiplicity modules.
REQUIRED_OPS = frozenset({
    "pfaffian_matchings", "pfaffian_expansion", "det_skew", "generator_count",
    "ne_turns", "endpoints", "enumerate_families", "turn_gf", "face_is_valid",
    "f_vector", "light_shadow", "fiber_size_check", "catalan", "lgv_hankel",
    "numerator", "hilbert_series", "hfun_coefficient", "hilbert_function",
    "hodge_dim", "face_formula_dim",
    "dimension", "mult", "gorenstein_codim3", "determinantal_degree",
})

CAPS = {"max_n": 20, "oracle_max_n": 10, "faces_max_n": paths.FACES_MAX_N, "fiber_max_n": 7, "mult_max_n": 40}

FAULTS = ("herzog-verbatim",)

REF_FACE = [
    (1, 3), (2, 4), (3, 4), (4, 5), (1, 6), (1, 7), (3, 7), (5, 7), (5, 8), (2, 9),
    (3, 9), (7, 9), (3, 10), (6, 10), (2, 11), (3, 11), (8, 11), (10, 11), (5, 12), (9, 12),
]
REF_FACE_IMAGE = ("RURRURRUURUU", "RRURRRUUURUU", "RRRURRURUUUU")
REF_PATH = paths.LatticePath((1, -1), "UURUURRRURUU")


@dataclass
class VerifyConfig:
    max_n: int = 12
    oracle_max_n: int = 9
    faces_max_n: int = 7
    fiber_max_n: int = 6
    mult_max_n: int = 30
    hfun_max_ell: int = 10
    face_max_ell: int = 6
    pfaffian_samples: int = 200
    seed: int = 0
    fault: str | None = None

    def validate(self) -> None:
        for key, cap in CAPS.items():
            value = getattr(self, key)
            if value > cap:
                raise ValueError(f"--{key.replace('_', '-')} {value} exceeds cap {cap}")
            if value < 0:
                raise ValueError(f"--{key.replace('_', '-')} must be nonnegative")
        if self.fault is not None and self.fault not in FAULTS:
            raise ValueError(f"unknown fault {self.fault!r}; known: {FAULTS}")


@dataclass
class Failure:
    check: str
    n: int | None
    r: int | None
    method: str
    detail: str

    def to_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "r": self.r, "method": self.method, "detail": self.detail}


@dataclass
class CheckResult:
    name: str
    failures: list[Failure]
    seconds: float


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)
    missing_ops: frozenset = frozenset()

    @property
    def failures(self) -> list[Failure]:
        out = [f for res in self.results for f in res.failures]
        if self.missing_ops:
            out.append(Failure("coverage", None, None, "-", f"ops never exercised: {sorted(self.missing_ops)}"))
        return out

    @property
    def ok(self) -> bool:
        return not self.failures


CheckFn = Callable[[VerifyConfig], Iterator[Failure]]
CHECKS: list[tuple[str, frozenset, CheckFn]] = []


def check(name: str, covers: set[str]):
    def deco(fn: CheckFn) -> CheckFn:
        CHECKS.append((name, frozenset(covers), fn))
        return fn
    return deco


@check("numerators", {"numerator", "hilbert_series"})
def check_numerators(cfg: VerifyConfig):
    for p in grid(cfg.max_n):
        qs = {m: hilbert.numerator(p, m) for m in ("det1", "det2", "det3")}
        if len(set(qs.values())) != 1:
            yield Failure("numerators", p.n, p.r, "det1/det2/det3", f"{qs}")
        q = qs["det1"]
        if not q.is_palindromic():
            yield Failure("numerators", p.n, p.r, "det1", f"h-vector not palindromic: {q.coeffs}")
        if q(1) == 0:
            yield Failure("numerators", p.n, p.r, "det1", "Q(1) = 0")
        s = hilbert.hilbert_series(p)
        expected_d = 0 if p.r == 0 else p.d
        if s.denom_exponent != expected_d:
            yield Failure("numerators", p.n, p.r, "hilbert_series", f"d = {s.denom_exponent}")
        if p.r >= 1 and p.n in (2 * p.r, 2 * p.r + 1):
            if q != 1 or p.d != binomial(p.n, 2):
                yield Failure("numerators", p.n, p.r, "boundary", f"Q = {q}, d = {p.d}")
    for n in range(1, cfg.max_n + 1):
        for r in range((n + 2) // 2, (n + 2) // 2 + 2):
            p = RingParams(n, r)
            s = hilbert.hilbert_series(p)
            if p.kind != FULL_POLYNOMIAL or s.numerator != 1 or s.denom_exponent != binomial(n, 2):
                yield Failure("numerators", n, r, "hilbert_series", f"degenerate class: {p.kind} {s}")


@check("path_oracle", {"endpoints", "enumerate_families", "ne_turns", "turn_gf", "lgv_hankel", "catalan"})
def check_path_oracle(cfg: VerifyConfig):
    if paths.ne_turns(REF_PATH) != 3 or REF_PATH.turn_points() != [(1, 1), (2, 3), (5, 4)]:
        yield Failure("path_oracle", None, None, "ne_turns", "reference path with 3 turns")
    if [paths.catalan(k) for k in range(6)] != [1, 1, 2, 5, 14, 42]:
        yield Failure("path_oracle", None, None, "catalan", "small values")
    for p in grid(cfg.oracle_max_n):
        gf = paths.turn_gf(p)
        for m in ("det1", "det2", "det3"):
            if hilbert.numerator(p, m) != gf:
                yield Failure("path_oracle", p.n, p.r, m, f"turn_gf = {gf}, numerator = {hilbert.numerator(p, m)}")
        ends = paths.endpoints(p)
        count = 0
        for fam in paths.enumerate_families(p):
            count += 1
            seen = set()
            for path, (a, e) in zip(fam, ends):
                pts = path.points()
                if pts[0] != a or pts[-1] != e or any(y > x for x, y in pts) or seen & set(pts):
                    yield Failure("path_oracle", p.n, p.r, "enumerate_families", f"bad family {fam}")
                seen.update(pts)
        hankel = paths.lgv_hankel(p)
        if not (count == gf(1) == hankel == multiplicity.mult(p, "series")):
            yield Failure("path_oracle", p.n, p.r, "lgv_hankel",
                          f"families={count}, gf(1)={gf(1)}, hankel={hankel}")
        for factor in (1, 2):
            starts, stops = paths.shifted_endpoints(p, factor)
            shifted = sum(1 for _ in paths.enumerate_nonintersecting(starts, stops))
            if shifted != count:
                yield Failure("path_oracle", p.n, p.r, f"shifted_endpoints x{factor}", f"{shifted} != {count}")


@check("faces", {"f_vector", "face_formula_dim", "face_is_valid", "hilbert_function"})
def check_faces(cfg: VerifyConfig):
    if not paths.face_is_valid(REF_FACE, RingParams(12, 3)) or paths.face_is_valid(REF_FACE, RingParams(12, 2)):
        yield Failure("faces", 12, 3, "face_is_valid", "20-point reference face")
    for p in grid(cfg.faces_max_n):
        f = paths.f_vector(p)
        for ell in range(cfg.face_max_ell + 1):
            a = hilbert.face_formula_dim(p, ell, f)
            b = hilbert.hilbert_function(p, ell, "series")
            if a != b:
                yield Failure("faces", p.n, p.r, "face_formula_dim", f"ell={ell}: faces {a} != series {b}")


@check("light_shadow", {"light_shadow", "fiber_size_check"})
def check_light_shadow(cfg: VerifyConfig):
    fam = paths.light_shadow(REF_FACE, RingParams(12, 3))
    if tuple(q.steps for q in fam) != REF_FACE_IMAGE:
        yield Failure("light_shadow", 12, 3, "light_shadow", "image of the reference face")
    for p in grid(cfg.fiber_max_n):
        if not paths.fiber_size_check(p):
            yield Failure("light_shadow", p.n, p.r, "fiber_size_check", "fiber sizes differ from C(d-m, c-m)")


CLOSED_FORMS = ("product45", "det46", "ht_det", "jlp_det", "ht_product")


@check("multiplicity", {"mult", "dimension", "gorenstein_codim3"})
def check_multiplicity(cfg: VerifyConfig):
    verbatim = cfg.fault == "herzog-verbatim"
    for p in grid(cfg.mult_max_n):
        vals = {m: multiplicity.mult(p, m) for m in CLOSED_FORMS}
        if p.n <= cfg.max_n:
            vals["series"] = multiplicity.mult(p, "series")
        if p.n >= 2 * p.r + 1 or verbatim:
            vals["herzog_trung"] = multiplicity.mult(p, "herzog_trung", verbatim=verbatim)
        ref = vals["product45"]
        for m, v in vals.items():
            if v != ref:
                yield Failure("multiplicity", p.n, p.r, m, f"{v} != product45 {ref}")
        if p.n >= 2 * p.r + 2 and p.n <= 20:
            if multiplicity.herzog_trung_verbatim(p.n - 2, p.r) != ref:
                yield Failure("multiplicity", p.n, p.r, "herzog_trung(verbatim, n-2)", "offset not reproduced")
        if p.n <= cfg.max_n and multiplicity.dimension(p) != hilbert.hilbert_series(p).denom_exponent:
            yield Failure("multiplicity", p.n, p.r, "dimension", "disagrees with series denominator")
    for s in range(1, 11):
        if 2 * s + 1 > cfg.mult_max_n:
            break
        g = multiplicity.gorenstein_codim3(s)
        if g != multiplicity.mult(RingParams(2 * s + 1, s - 1), "product45") or 6 * g != s * (s + 1) * (2 * s + 1):
            yield Failure("multiplicity", 2 * s + 1, s - 1, "gorenstein_codim3", f"s={s}")


@check("hilbert_function", {"hfun_coefficient", "hodge_dim", "hilbert_function"})
def check_hilbert_function(cfg: VerifyConfig):
    for p in grid(cfg.max_n):
        q = hilbert.numerator(p)
        for k in range(-p.r - 1, p.n + 2):
            if hilbert.hfun_coefficient(p, k, "F") != q[k]:
                yield Failure("hilbert_function", p.n, p.r, "F_k", f"k={k}")
        top = (0 if p.r == 0 else p.d) + q.degree + 5
        for ell in range(top + 1):
            ref = hilbert.hilbert_function(p, ell, "series")
            methods = ("F", "G", "H") if ell <= cfg.hfun_max_ell else ("F",)
            for m in methods:
                v = hilbert.hilbert_function(p, ell, m)
                if v != ref:
                    yield Failure("hilbert_function", p.n, p.r, m, f"ell={ell}: {v} != series {ref}")
    for n in range(2, cfg.max_n + 1):
        p = RingParams(n, 1)
        for ell in range(cfg.hfun_max_ell + 1):
            vals = {hilbert.hodge_dim(n, ell, "Ho1"), hilbert.hodge_dim(n, ell, "Ho2"),
                    hilbert.hilbert_function(p, ell, "series")}
            if len(vals) != 1:
                yield Failure("hilbert_function", n, 1, "hodge", f"ell={ell}: {vals}")


@check("pfaffian", {"pfaffian_matchings", "pfaffian_expansion", "det_skew", "generator_count"})
def check_pfaffian(cfg: VerifyConfig):
    rng = random.Random(cfg.seed)
    for t in range(cfg.pfaffian_samples):
        order = 2 + t % 9
        A = pfaffian.SkewSymMatrix.random(order, rng=rng)
        det = pfaffian.det_skew(A)
        if order % 2:
            if det != 0:
                yield Failure("pfaffian", None, None, "det_skew", f"odd order {order} det {det}")
            continue
        pm = pfaffian.pfaffian_matchings(A)
        pe = pfaffian.pfaffian_expansion(A)
        if pm != pe or pm * pm != det:
            yield Failure("pfaffian", None, None, "pfaffian", f"order {order}: {pm}, {pe}, det {det}")
    for n in range(1, 9):
        for r in range(0, n // 2 + 1):
            expected = sum(1 for _ in combinations(range(n), 2 * r + 2))
            if pfaffian.generator_count(RingParams(n, r)) != expected:
                yield Failure("pfaffian", n, r, "generator_count", "")


@check("determinantal_degree", {"determinantal_degree"})
def check_determinantal_degree(cfg: VerifyConfig):
    if multiplicity.determinantal_degree(2, 2, 1) != 2 or multiplicity.determinantal_degree(3, 3, 2) != 3:
        yield Failure("determinantal_degree", None, None, "det", "spot values")
    for m in range(1, 9):
        for n in range(1, 9):
            for rank in range(1, min(m, n)):
                a = multiplicity.determinantal_degree(m, n, rank, "det")
                b = multiplicity.determinantal_degree(m, n, rank, "product")
                if a != b:
                    yield Failure("determinantal_degree", None, None, "det/product", f"({m},{n},{rank}): {a} != {b}")


def run_verification(cfg: VerifyConfig, only: set[str] | None = None) -> VerifyReport:
    cfg.validate()
    report = VerifyReport()
    covered: set[str] = set()
    for name, covers, fn in CHECKS:
        if only is not None and name not in only:
            continue
        t0 = time.perf_counter()
        failures = list(fn(cfg))
        report.results.append(CheckResult(name, failures, time.perf_counter() - t0))
        covered |= covers
    if only is None:
        report.missing_ops = REQUIRED_OPS - covered
    return report
