"""Theorem-verification registry.

Each registered check binds a claim id to parameters, a default n-range and a
row-producing runner.  Rows carry one of five modes:

  ExactEquality         integer equality, asserted
  LowerBoundVsOracle    integer inequality against the exhaustive oracle
  Sandwich              two-sided integer inequality
  ConstructionFreeness  a generated graph verified free of its forbidden family
  RatioTrend            finite-n ratio sequence, reported but never pass/fail

Verdicts account for search budgets: an inequality certified by a partial
(non-exhaustive) search in the safe direction still passes; one that cannot
be certified is inconclusive, never silently weakened.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import comb

from . import constructions as cons
from .counting import count_copies, count_copies_meeting, is_free
from .graph6 import decode_graph6, encode_graph6
from .graphs import (Graph, canonical_graph, complete, complete_bipartite,
                     copies, cycle, disjoint_union, is_connected, turan)
from .gspec import parse_spec
from .packing import is_kF_free
from .search import (DEFAULT_WITNESS_CAP, ExtremalResult, Objective,
                     SearchProblem, brute_force_ex)

EXACT = "ExactEquality"
LOWER = "LowerBoundVsOracle"
SANDWICH = "Sandwich"
FREE = "ConstructionFreeness"
RATIO = "RatioTrend"

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
REPORTED = "reported"


@dataclass(frozen=True)
class VerifyConfig:
    witness_cap: int = DEFAULT_WITNESS_CAP
    budget_seconds: float | None = None
    max_explored: int | None = None
    n_cap: int = 10


@dataclass(frozen=True)
class CheckRow:
    check_id: str
    n: int
    params: str
    mode: str
    expected: str
    actual: str
    verdict: str


@dataclass
class TheoremCheck:
    check_id: str
    params: dict
    n_range: tuple[int, int]
    rows: list[CheckRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.verdict != FAIL for r in self.rows)


class UnknownCheckError(ValueError):
    pass


class HypothesisError(ValueError):
    """Raised when parameters violate a claim's hypotheses."""


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _params_str(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def _graph_param(params: dict, key: str) -> Graph:
    return parse_spec(str(params[key])).build()


def _copies_objective(pattern: Graph) -> Objective:
    # K_2 counting is edge counting; sharing the objective shares the cache.
    if pattern.n == 2 and pattern.edge_count() == 1:
        return Objective.edges()
    return Objective.copies(pattern)


def _brute(n: int, forbidden: tuple[Graph, ...], objective: Objective,
           cfg: VerifyConfig) -> ExtremalResult:
    problem = SearchProblem(n, forbidden, objective)
    return brute_force_ex(problem, witness_cap=cfg.witness_cap,
                          budget_seconds=cfg.budget_seconds,
                          max_explored=cfg.max_explored,
                          n_cap=max(cfg.n_cap, n))


def _verdict_geq(value: int | None, exhaustive: bool, bound: int) -> str:
    """Certify (search maximum) >= bound; partial maxima are lower bounds."""
    if value is not None and value >= bound:
        return PASS
    return FAIL if exhaustive else INCONCLUSIVE


def _verdict_leq(lhs: int, lhs_exhaustive: bool, rhs: int, rhs_exhaustive: bool) -> str:
    """Certify lhs <= rhs where both sides are search maxima."""
    if lhs_exhaustive and lhs <= rhs:
        return PASS
    if lhs > rhs and rhs_exhaustive:
        return FAIL  # a partial lhs only grows, so the violation is real
    return INCONCLUSIVE


def _free_row(check_id: str, n: int, params: str, g: Graph, k: int,
              f: Graph, label: str) -> CheckRow:
    ok = is_kF_free(g, k, f)
    return CheckRow(check_id, n, params, FREE, f"{label}-free",
                    "free" if ok else "not-free", PASS if ok else FAIL)


def _ratio_row(check_id: str, n: int, params: str, label: str,
               pairs: list[tuple[str, float]]) -> CheckRow:
    actual = ";".join(f"{name}:{value:.6f}" for name, value in pairs)
    return CheckRow(check_id, n, params, RATIO, label, actual, REPORTED)


def _witness_graph(result: ExtremalResult) -> Graph | None:
    if not result.witnesses:
        return None
    return decode_graph6(result.witnesses[0])


# ---------------------------------------------------------------------------
# Check runners
# ---------------------------------------------------------------------------

def _run_erdos(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    s, t = int(p["s"]), int(p["t"])
    if not 2 <= s < t:
        raise HypothesisError(f"needs 2 <= s < t, got s={s}, t={t}")
    ps = _params_str(p)
    rows, notes = [], []
    for n in range(n_range[0], n_range[1] + 1):
        if n < t:
            continue
        expected = cons.erdos_value(n, s, t)
        res = _brute(n, (complete(t),), _copies_objective(complete(s)), cfg)
        ok = res.exhaustive and res.value == expected
        verdict = PASS if ok else (FAIL if res.exhaustive else INCONCLUSIVE)
        rows.append(CheckRow(cid, n, ps, EXACT, str(expected),
                             str(res.value), verdict))
        tg6 = encode_graph6(canonical_graph(turan(n, t - 1)))
        present = tg6 in res.witnesses
        rows.append(CheckRow(cid, n, ps, EXACT, f"witness:{tg6}",
                             "present" if present else "absent",
                             PASS if present else (FAIL if res.exhaustive else INCONCLUSIVE)))
    return rows, notes


def _run_gorgol(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    k = int(p["k"])
    f = _graph_param(p, "f")
    if k < 1 or f.edge_count() == 0:
        raise HypothesisError("needs k >= 1 and a non-empty pattern")
    ps = _params_str(p)
    rows, notes = [], []
    kf = f
    for _ in range(k - 1):
        kf = disjoint_union(kf, f)
    for n in range(n_range[0], n_range[1] + 1):
        res_k = _brute(n, (kf,), Objective.edges(), cfg)
        res_1 = _brute(n, (f,), Objective.edges(), cfg)
        if res_k.value is None or res_1.value is None:
            continue
        diff = res_k.value - res_1.value
        both = res_k.exhaustive and res_1.exhaustive
        ok = 0 <= diff <= 2 * n
        rows.append(CheckRow(cid, n, ps, LOWER, f"0..{2 * n}", str(diff),
                             PASS if ok and both else (FAIL if both else INCONCLUSIVE)))
        # Sharper upper bound, stated for connected patterns only: delete the
        # other k-1 copies' worth of vertices, close with complete-graph slack.
        d = (k - 1) * f.n
        if is_connected(f) and n - d >= f.n and n >= k * f.n:
            res_small = _brute(n - d, (f,), Objective.edges(), cfg)
            bound = res_small.value + comb(d, 2) + d * (n - d)
            certified = res_k.exhaustive and res_small.exhaustive
            ok = res_k.value <= bound
            rows.append(CheckRow(cid, n, ps, SANDWICH, f"<={bound}",
                                 str(res_k.value),
                                 PASS if ok and certified
                                 else (INCONCLUSIVE if not certified else FAIL)))
    return rows, notes


def _run_thm21(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    h = _graph_param(p, "h")
    f = _graph_param(p, "f")
    k = int(p["k"])
    if k < 2:
        raise HypothesisError("needs k >= 2")
    if k < h.n:
        raise HypothesisError("the two-sided claim needs k >= |V(H)|; "
                              f"got k={k}, |V(H)|={h.n}")
    if f.edge_count() == 0:
        raise HypothesisError("forbidden pattern must have an edge")
    ps = _params_str(p)
    rows, notes = [], []
    kf = f
    for _ in range(k - 1):
        kf = disjoint_union(kf, f)
    for n in range(n_range[0], n_range[1] + 1):
        if n - k + 1 < 1:
            continue
        inner = _brute(n - k + 1, (f,), Objective.exbar(h), cfg)
        g_star = _witness_graph(inner)
        if g_star is None or inner.value is None:
            continue
        built = cons.universal_join(k, g_star)
        rows.append(_free_row(cid, n, ps, built, k, f, f"{k}F"))
        built_count = count_copies(built, h)
        ok = built_count >= inner.value - 1
        rows.append(CheckRow(cid, n, ps, LOWER, f">={inner.value - 1}",
                             str(built_count),
                             PASS if ok else (FAIL if inner.exhaustive else INCONCLUSIVE)))
        oracle = _brute(n, (kf,), _copies_objective(h), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                             str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
        outer = _brute(n, (f,), Objective.exbar(h), cfg)
        if oracle.value is not None and outer.value:
            rows.append(_ratio_row(cid, n, ps, "bounded-multiple",
                                   [("oracle/induced_total",
                                     oracle.value / outer.value)]))
    return rows, notes


def _run_thm22(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    f1 = _graph_param(p, "f1")
    f2 = _graph_param(p, "f2")
    k3 = complete(3)
    for name, fi in (("f1", f1), ("f2", f2)):
        if fi.n == 2 and fi.edge_count() == 1:
            raise HypothesisError(f"{name} must differ from a single edge")
        if fi.edge_count() == 0:
            raise HypothesisError(f"{name} must be non-empty")
    ps = _params_str(p)
    rows, notes = [], []
    f = disjoint_union(f1, f2)
    for n in range(n_range[0], n_range[1] + 1):
        oracle = _brute(n, (f,), _copies_objective(k3), cfg)
        if oracle.value is None:
            continue
        best_single = None
        for fi in (f1, f2):
            r = _brute(n, (fi,), _copies_objective(k3), cfg)
            if r.value is not None:
                best_single = r.value if best_single is None else max(best_single, r.value)
        if best_single is not None:
            rows.append(CheckRow(cid, n, ps, LOWER, f">={best_single}",
                                 str(oracle.value),
                                 _verdict_geq(oracle.value, oracle.exhaustive, best_single)))
        if n >= 2:
            pair = _brute(n - 1, (f1, f2), Objective.edges(), cfg)
            g0 = _witness_graph(pair)
            if g0 is not None and pair.value is not None:
                built = cons.universal_join(2, g0)
                ok = is_free(built, f)
                rows.append(CheckRow(cid, n, ps, FREE, "union-free",
                                     "free" if ok else "not-free",
                                     PASS if ok else FAIL))
                built_count = count_copies(built, k3)
                ok2 = built_count >= pair.value
                rows.append(CheckRow(cid, n, ps, LOWER, f">={pair.value}",
                                     str(built_count),
                                     PASS if ok2 else (FAIL if pair.exhaustive else INCONCLUSIVE)))
                rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                                     str(oracle.value),
                                     _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
    return rows, notes


def _run_thm24(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    f = _graph_param(p, "f")
    k = int(p["k"])
    if f.n < 4:
        raise HypothesisError(f"needs |V(F)| >= 4, got {f.n}")
    if k < 2:
        raise HypothesisError("needs k >= 2")
    ps = _params_str(p)
    rows, notes = [], []
    k3 = complete(3)
    kf = f
    for _ in range(k - 1):
        kf = disjoint_union(kf, f)
    for n in range(n_range[0], n_range[1] + 1):
        if n - k + 1 < 1:
            continue
        star = _brute(n - k + 1, (f,), Objective.exstar(k), cfg)
        oracle = _brute(n, (kf,), _copies_objective(k3), cfg)
        if star.value is None or oracle.value is None:
            continue
        rows.append(CheckRow(cid, n, ps, SANDWICH, f"<={oracle.value}",
                             str(star.value),
                             _verdict_leq(star.value, star.exhaustive,
                                          oracle.value, oracle.exhaustive)))
        # definitional sandwich: triangle max <= star max <= (k-1)*edge max + triangle max
        tri = _brute(n - k + 1, (f,), _copies_objective(k3), cfg)
        edg = _brute(n - k + 1, (f,), Objective.edges(), cfg)
        if tri.value is not None and edg.value is not None:
            lo_ok = _verdict_leq(tri.value, tri.exhaustive, star.value, star.exhaustive)
            hi = (k - 1) * edg.value + tri.value
            hi_ok = _verdict_leq(star.value, star.exhaustive, hi,
                                 tri.exhaustive and edg.exhaustive)
            verdict = FAIL if FAIL in (lo_ok, hi_ok) else (
                INCONCLUSIVE if INCONCLUSIVE in (lo_ok, hi_ok) else PASS)
            rows.append(CheckRow(cid, n, ps, SANDWICH,
                                 f"{tri.value}..{hi}", str(star.value), verdict))
    return rows, notes


def _run_thm27(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    r = int(p["r"])
    f = _graph_param(p, "f")
    k = int(p["k"])
    if r < 2 or k < 1 or f.edge_count() == 0:
        raise HypothesisError("needs r >= 2, k >= 1 and a non-empty pattern")
    ps = _params_str(p)
    rows, notes = [], []
    kf = f
    for _ in range(k - 1):
        kf = disjoint_union(kf, f)
    for n in range(n_range[0], n_range[1] + 1):
        per_m = []
        for m in range(1, r + 1):
            res = _brute(n, (f,), _copies_objective(complete(m)), cfg)
            per_m.append(res)
        values = [res.value if res.value is not None else -1 for res in per_m]
        best = max(values)
        m0 = values.index(best) + 1
        if k <= r - m0:
            notes.append(f"n={n}: k={k} <= r-m0={r - m0}, construction skipped")
            continue
        inner = _brute(n - (r - m0), (f,), _copies_objective(complete(m0)), cfg)
        g_star = _witness_graph(inner)
        if g_star is None or inner.value is None:
            continue
        built = cons.universal_join(r - m0 + 1, g_star)
        rows.append(_free_row(cid, n, ps, built, k, f, f"{k}F"))
        built_count = count_copies(built, complete(r))
        ok = built_count >= inner.value
        rows.append(CheckRow(cid, n, ps, LOWER, f">={inner.value}",
                             str(built_count),
                             PASS if ok else (FAIL if inner.exhaustive else INCONCLUSIVE)))
        oracle = _brute(n, (kf,), _copies_objective(complete(r)), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                             str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
    return rows, notes


def _run_thm32(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    s, t, k = int(p["s"]), int(p["t"]), int(p["k"])
    x = cons.x_exponent(k, t, s)
    if x < 1:
        raise HypothesisError(f"construction regime needs exponent >= 1, got {x}")
    ps = _params_str(p)
    rows, notes = [], []
    kt_pattern = complete(t)
    kf = copies(k, kt_pattern)
    budget = s + (k - 1) * x
    rows.append(CheckRow(cid, n_range[0], ps, FREE, f"<={k * t - 1}",
                         str(budget), PASS if budget < k * t else FAIL))
    for n in range(n_range[0], n_range[1] + 1):
        if n < s:
            continue
        built = cons.thm32_lower(n, s, t, k)
        rows.append(_free_row(cid, n, ps, built, k, kt_pattern, f"{k}K{t}"))
        inner = cons.turan_clique_count(n - s + x, x, x)
        built_count = count_copies(built, complete(s))
        rows.append(CheckRow(cid, n, ps, LOWER, f">={inner}", str(built_count),
                             PASS if built_count >= inner else FAIL))
        oracle = _brute(n, (kf,), _copies_objective(complete(s)), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                             str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
        if oracle.value is not None:
            rows.append(_ratio_row(cid, n, ps, f"Theta(n^{x})",
                                   [("oracle", oracle.value / n ** x),
                                    ("construction", built_count / n ** x)]))
    return rows, notes


def _run_thm34(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    s, t, k = int(p["s"]), int(p["t"]), int(p["k"])
    if not (t > s >= 1) or k < 1:
        raise HypothesisError(f"needs t > s >= 1 and k >= 1, got s={s}, t={t}, k={k}")
    ps = _params_str(p)
    rows, notes = [], []
    kf = copies(k, complete(t))
    for n in range(n_range[0], n_range[1] + 1):
        if n < t - 1:
            continue
        built = turan(n, t - 1)
        rows.append(_free_row(cid, n, ps, built, k, complete(t), f"{k}K{t}"))
        lower = cons.turan_clique_count(n, t - 1, s)
        oracle = _brute(n, (kf,), _copies_objective(complete(s)), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={lower}", str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, lower)))
        if oracle.value is not None:
            asym = comb(t - 1, s) * (n / (t - 1)) ** s
            rows.append(_ratio_row(cid, n, ps, f"to-asymptote(n^{s})",
                                   [("oracle/asym", oracle.value / asym)]))
    return rows, notes


def _run_thm35(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    s, t, k = int(p["s"]), int(p["t"]), int(p["k"])
    if not (s >= t >= s - k + 2) or t < 2:
        raise HypothesisError(f"needs s >= t >= s-k+2 and t >= 2, got s={s}, t={t}, k={k}")
    ps = _params_str(p)
    rows, notes = [], []
    kf = copies(k, complete(t))
    for n in range(n_range[0], n_range[1] + 1):
        if n < k or n - k + 1 < t - 1:
            continue
        built = cons.thm35_lower(n, t, k)
        rows.append(_free_row(cid, n, ps, built, k, complete(t), f"{k}K{t}"))
        leading = cons.thm35_leading(n, s, t, k)
        universal = (1 << (k - 1)) - 1
        meeting = count_copies_meeting(built, complete(s), universal, s - t + 1)
        rows.append(CheckRow(cid, n, ps, EXACT, str(leading), str(meeting),
                             PASS if meeting == leading else FAIL))
        oracle = _brute(n, (kf,), _copies_objective(complete(s)), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={leading}", str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, leading)))
        if oracle.value is not None:
            asym = comb(k - 1, s - t + 1) * (n / (t - 1)) ** (t - 1)
            rows.append(_ratio_row(cid, n, ps, f"to-asymptote(n^{t - 1})",
                                   [("oracle/asym", oracle.value / asym)]))
    return rows, notes


def _run_cycles(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    """Shared runner for the odd/even forbidden-cycle claims."""
    r, k, l = int(p["r"]), int(p["k"]), int(p["l"])
    odd = p["parity"] == "odd"
    length = 2 * l + 1 if odd else 2 * l
    if l < 2 or r < 2 or k < 1:
        raise HypothesisError("needs l >= 2, r >= 2, k >= 1")
    if cid == "thm4.1a" and r > k:
        raise HypothesisError(f"this regime needs r <= k, got r={r}, k={k}")
    if cid == "thm4.1b" and r <= k + 1:
        raise HypothesisError(f"this regime needs r > k+1, got r={r}, k={k}")
    ps = _params_str(p)
    rows, notes = [], []
    cyc = cycle(length)
    kf = copies(k, cyc)
    exponent = 2.0 if (odd and r <= k) else 1 + 1 / l
    for n in range(n_range[0], n_range[1] + 1):
        oracle = _brute(n, (kf,), _copies_objective(complete(r)), cfg)
        if oracle.value is None:
            continue
        if odd and r <= k and n - k + 1 >= 1:
            inner = _brute(n - k + 1, (cyc,), _copies_objective(complete(r)), cfg)
            g_star = _witness_graph(inner)
            if g_star is not None:
                built = cons.universal_join(k, g_star)
                rows.append(_free_row(cid, n, ps, built, k, cyc, f"{k}C{length}"))
                built_count = count_copies(built, complete(r))
                rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                                     str(oracle.value),
                                     _verdict_geq(oracle.value, oracle.exhaustive,
                                                  built_count)))
        rows.append(_ratio_row(cid, n, ps, f"O(n^{exponent:.2f})",
                               [("oracle", oracle.value / n ** exponent)]))
    return rows, notes


def _run_prop51(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    a, b, s, t = int(p["a"]), int(p["b"]), int(p["s"]), int(p["t"])
    k = int(p.get("k", 1))
    if not (s <= t and a <= b < s):
        raise HypothesisError(f"needs s <= t and a <= b < s, got a={a}, b={b}, s={s}, t={t}")
    ps = _params_str(p)
    rows, notes = [], []
    forb = copies(k, complete_bipartite(s, t))
    pattern = complete_bipartite(a, b)
    exponent = a + b - a * b / s
    for n in range(n_range[0], n_range[1] + 1):
        oracle = _brute(n, (forb,), _copies_objective(pattern), cfg)
        if oracle.value is None:
            continue
        if k > 1:
            single = _brute(n, (complete_bipartite(s, t),),
                            _copies_objective(pattern), cfg)
            if single.value is not None:
                rows.append(CheckRow(cid, n, ps, LOWER, f">={single.value}",
                                     str(oracle.value),
                                     _verdict_geq(oracle.value, oracle.exhaustive,
                                                  single.value)))
        rows.append(_ratio_row(cid, n, ps, f"O(n^{exponent:.3f})",
                               [("oracle", oracle.value / n ** exponent)]))
    return rows, notes


def _run_prop53(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    a, b, s, t, k = int(p["a"]), int(p["b"]), int(p["s"]), int(p["t"]), int(p["k"])
    if not (a <= b and b >= s and s <= t):
        raise HypothesisError(f"needs a <= b, b >= s, s <= t, got a={a}, b={b}, s={s}, t={t}")
    if k <= a:
        raise HypothesisError(f"the matching lower bound needs k > a, got k={k}, a={a}")
    ps = _params_str(p)
    rows, notes = [], []
    kst = complete_bipartite(s, t)
    forb = copies(k, kst)
    pattern = complete_bipartite(a, b)
    for n in range(n_range[0], n_range[1] + 1):
        if n - k + 1 < b:
            continue
        host = _brute(n - k + 1, (kst,), Objective.edges(), cfg)
        g_star = _witness_graph(host)
        if g_star is None:
            continue
        built = cons.universal_join(k, g_star)
        rows.append(_free_row(cid, n, ps, built, k, kst, f"{k}K{s},{t}"))
        floor_count = comb(k - 1, a) * comb(n - k + 1, b)
        built_count = count_copies(built, pattern)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={floor_count}",
                             str(built_count),
                             PASS if built_count >= floor_count else FAIL))
        oracle = _brute(n, (forb,), _copies_objective(pattern), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                             str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
        if oracle.value is not None:
            rows.append(_ratio_row(cid, n, ps, f"Theta(n^{b})",
                                   [("oracle", oracle.value / n ** b)]))
    return rows, notes


def _run_prop54(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    variant = str(p.get("variant", "b"))
    a, b, s, t = int(p["a"]), int(p["b"]), int(p["s"]), int(p["t"])
    ps = _params_str(p)
    rows, notes = [], []
    kst = complete_bipartite(s, t)
    pattern = complete_bipartite(a, b)
    if variant == "a":
        if not (s <= a <= b <= t):
            raise HypothesisError(f"variant a needs s <= a <= b <= t, got {p}")
        for n in range(n_range[0], n_range[1] + 1):
            oracle = _brute(n, (kst,), _copies_objective(pattern), cfg)
            if oracle.value is None:
                continue
            rows.append(_ratio_row(cid, n, ps, f"O(n^{s})",
                                   [("oracle", oracle.value / n ** s)]))
        return rows, notes
    if not (a < s <= b <= t):
        raise HypothesisError(f"variant b needs a < s <= b <= t, got {p}")
    for n in range(n_range[0], n_range[1] + 1):
        if n <= s:
            continue
        built = cons.prop54_lower(n, s)
        ok = is_free(built, kst)
        rows.append(CheckRow(cid, n, ps, FREE, f"K{s},{t}-free",
                             "free" if ok else "not-free", PASS if ok else FAIL))
        floor_count = comb(s - 1, a) * comb(n - s + 1, b) if s - 1 >= a else 0
        built_count = count_copies(built, pattern)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={floor_count}",
                             str(built_count),
                             PASS if built_count >= floor_count else FAIL))
        oracle = _brute(n, (kst,), _copies_objective(pattern), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                             str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
        if oracle.value is not None:
            rows.append(_ratio_row(cid, n, ps, f"Theta(n^{b})",
                                   [("oracle", oracle.value / n ** b)]))
    return rows, notes


def _run_prop61(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    l = int(p["l"])
    if l < 1:
        raise HypothesisError("needs l >= 1")
    ps = _params_str(p)
    rows, notes = [], []
    k3 = complete(3)
    pattern = copies(l, complete(2)) if l > 1 else complete(2)
    for n in range(n_range[0], n_range[1] + 1):
        if n < 2 * l:
            continue
        expected = cons.prop61_value(n, l)
        oracle = _brute(n, (k3,), _copies_objective(pattern), cfg)
        ok = oracle.exhaustive and oracle.value == expected
        rows.append(CheckRow(cid, n, ps, EXACT, str(expected), str(oracle.value),
                             PASS if ok else (FAIL if oracle.exhaustive else INCONCLUSIVE)))
    return rows, notes


def _run_thm62(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    l, k = int(p["l"]), int(p["k"])
    if not l < k:
        raise HypothesisError(f"needs l < k, got l={l}, k={k}")
    ps = _params_str(p)
    rows, notes = [], []
    k3 = complete(3)
    kf = copies(k, k3)
    pattern = copies(l, k3) if l > 1 else k3
    for n in range(n_range[0], n_range[1] + 1):
        if n < k + 1:
            continue
        built = cons.thm62_lower(n, k)
        rows.append(_free_row(cid, n, ps, built, k, k3, f"{k}K3"))
        m = n - k + 1
        bip = complete_bipartite(m // 2, (m + 1) // 2) if m >= 2 else None
        if bip is None:
            continue
        match_pattern = copies(l, complete(2)) if l > 1 else complete(2)
        leading = comb(k - 1, l) * count_copies(bip, match_pattern)
        built_count = count_copies(built, pattern)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={leading}", str(built_count),
                             PASS if built_count >= leading else FAIL))
        oracle = _brute(n, (kf,), _copies_objective(pattern), cfg)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={built_count}",
                             str(oracle.value),
                             _verdict_geq(oracle.value, oracle.exhaustive, built_count)))
        if oracle.value is not None:
            rows.append(_ratio_row(cid, n, ps, f"to-asymptote((n^2/4)^{l})",
                                   [("oracle/asym",
                                     oracle.value / (comb(k - 1, l) * (n * n / 4) ** l))]))
    return rows, notes


def _run_prop63(cid: str, p: dict, n_range: tuple[int, int], cfg: VerifyConfig):
    f1 = _graph_param(p, "f1")
    f2 = _graph_param(p, "f2")
    if f1.edge_count() == 0 or f2.edge_count() == 0:
        raise HypothesisError("components must be non-empty")
    ps = _params_str(p)
    rows, notes = [], []
    f = disjoint_union(f1, f2)
    for n in range(n_range[0], n_range[1] + 1):
        whole = _brute(n, (f,), Objective.edges(), cfg)
        parts = [_brute(n, (fi,), Objective.edges(), cfg) for fi in (f1, f2)]
        if whole.value is None or any(r.value is None for r in parts):
            continue
        best = max(r.value for r in parts)
        rows.append(CheckRow(cid, n, ps, LOWER, f">={best}", str(whole.value),
                             _verdict_geq(whole.value, whole.exhaustive, best)))
        certified = whole.exhaustive and all(r.exhaustive for r in parts)
        diff = whole.value - best
        ok = diff <= 3 * n
        rows.append(CheckRow(cid, n, ps, SANDWICH, f"<={3 * n}", str(diff),
                             PASS if ok and certified else
                             (INCONCLUSIVE if not certified else FAIL)))
    return rows, notes


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckDef:
    check_id: str
    runner: object
    default_params: dict
    default_range: tuple[int, int]
    summary: str


_REGISTRY: dict[str, CheckDef] = {}
_ALIASES = {
    "prop1.2": "erdos",
    "gorgol": "thm1.1-gorgol",
    "thm3.2-lb": "thm3.2",
}


def _register(check_id, runner, params, n_range, summary):
    _REGISTRY[check_id] = CheckDef(check_id, runner, params, n_range, summary)


_register("erdos", _run_erdos, {"s": 2, "t": 3}, (5, 8),
          "clique count maximum over K_t-free hosts matches the balanced multipartite value")
_register("thm1.1-gorgol", _run_gorgol, {"f": "K3", "k": 2}, (6, 9),
          "edge maximum under k disjoint forbidden copies exceeds the single-copy maximum by O(n)")
_register("thm2.1", _run_thm21, {"h": "K2", "f": "K3", "k": 2}, (5, 8),
          "copy maximum under k disjoint copies vs the induced-family total")
_register("thm2.2", _run_thm22, {"f1": "K4", "f2": "C4"}, (5, 8),
          "triangle maximum under a forbidden disjoint union vs single and pairwise bounds")
_register("thm2.4", _run_thm24, {"f": "C5", "k": 2}, (7, 8),
          "weighted edge+triangle maximum sandwiches the triangle maximum under k disjoint copies")
_register("thm2.7", _run_thm27, {"r": 3, "f": "C4", "k": 2}, (5, 8),
          "clique-count maximum under k disjoint copies vs the best smaller-clique maximum")
_register("thm3.2", _run_thm32, {"s": 3, "t": 3, "k": 2}, (6, 9),
          "clique counts under k disjoint forbidden cliques grow as n^x")
_register("thm3.4", _run_thm34, {"s": 2, "t": 3, "k": 2}, (5, 8),
          "for t > s the balanced multipartite host stays extremal under k disjoint copies")
_register("thm3.5", _run_thm35, {"s": 3, "t": 3, "k": 2}, (6, 9),
          "universal-clique construction attains the leading term exactly")
_register("thm4.1a", _run_cycles, {"r": 2, "k": 2, "l": 2, "parity": "odd"}, (5, 8),
          "small cliques under k disjoint odd cycles: quadratic growth")
_register("thm4.1b", _run_cycles, {"r": 4, "k": 2, "l": 2, "parity": "odd"}, (5, 8),
          "large cliques under k disjoint odd cycles: subquadratic ratio report")
_register("prop4.2", _run_cycles, {"r": 3, "k": 2, "l": 2, "parity": "even"}, (5, 8),
          "cliques under k disjoint even cycles: ratio report")
_register("prop5.1", _run_prop51, {"a": 1, "b": 1, "s": 2, "t": 2}, (5, 8),
          "small bicliques in a biclique-free host: ratio report")
_register("prop5.2", _run_prop51, {"a": 1, "b": 1, "s": 2, "t": 2, "k": 2}, (5, 8),
          "same exponent under k disjoint forbidden bicliques")
_register("prop5.3", _run_prop53, {"a": 1, "b": 2, "s": 2, "t": 2, "k": 2}, (6, 8),
          "universal-clique biclique construction attains order n^b")
_register("prop5.4", _run_prop54, {"variant": "b", "a": 1, "b": 2, "s": 2, "t": 2}, (5, 8),
          "lopsided biclique host is extremal for order n^b")
_register("prop6.1", _run_prop61, {"l": 2}, (4, 8),
          "matching count maximum in triangle-free hosts: exact product formula")
_register("thm6.2", _run_thm62, {"l": 1, "k": 2}, (6, 9),
          "disjoint-triangle counts under k disjoint forbidden triangles")
_register("prop6.3", _run_prop63, {"f1": "K3", "f2": "C4"}, (6, 8),
          "edge maximum under a forbidden disjoint union vs componentwise maxima")


def registry_ids() -> list[str]:
    return sorted(_REGISTRY)


def check_summary(check_id: str) -> str:
    return _REGISTRY[_ALIASES.get(check_id, check_id)].summary


def run_check(check_id: str, params: dict | None = None,
              n_range: tuple[int, int] | None = None,
              config: VerifyConfig | None = None) -> TheoremCheck:
    """Run one registered check; unknown ids and hypothesis violations raise."""
    resolved = _ALIASES.get(check_id, check_id)
    if resolved not in _REGISTRY:
        raise UnknownCheckError(f"unknown check id {check_id!r}; "
                                f"known: {', '.join(registry_ids())}")
    cdef = _REGISTRY[resolved]
    merged = dict(cdef.default_params)
    if params:
        merged.update(params)
    rng = n_range if n_range is not None else cdef.default_range
    if rng[0] > rng[1] or rng[0] < 1:
        raise ValueError(f"bad n range {rng}")
    cfg = config or VerifyConfig()
    rows, notes = cdef.runner(resolved, merged, rng, cfg)
    return TheoremCheck(resolved, merged, rng, rows, notes)


def _run_check_task(args: tuple) -> TheoremCheck:
    cid, n_range, config = args
    return run_check(cid, None, n_range, config)


def run_all(config: VerifyConfig | None = None,
            n_range: tuple[int, int] | None = None,
            ids: list[str] | None = None,
            workers: int = 1) -> list[TheoremCheck]:
    """Run every registered check (or the given ids) in sorted id order.

    With workers > 1 checks run in separate processes; results are reordered
    by id, so the report is identical regardless of scheduling."""
    todo = list(ids if ids is not None else registry_ids())
    if workers > 1 and len(todo) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = list(pool.map(_run_check_task,
                                 [(cid, n_range, config) for cid in todo]))
        return done
    return [run_check(cid, None, n_range, config) for cid in todo]


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

CSV_HEADER = ["check_id", "n", "params", "mode", "expected", "actual", "verdict"]


def collect_rows(checks: list[TheoremCheck]) -> list[CheckRow]:
    rows: list[CheckRow] = []
    for check in checks:
        rows.extend(check.rows)
    rows.sort(key=lambda r: (r.check_id, r.n))
    return rows


def report_csv(checks: list[TheoremCheck]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in collect_rows(checks):
        writer.writerow([r.check_id, r.n, r.params, r.mode,
                         r.expected, r.actual, r.verdict])
    return buf.getvalue()


def report_table(checks: list[TheoremCheck]) -> str:
    rows = collect_rows(checks)
    cells = [CSV_HEADER] + [[r.check_id, str(r.n), r.params, r.mode,
                             r.expected, r.actual, r.verdict] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(CSV_HEADER))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
             for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def emit_report(checks: list[TheoremCheck], csv_path: str | None = None) -> str:
    """Render the aligned table (returned) and optionally write the CSV."""
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            fh.write(report_csv(checks))
    return report_table(checks)
