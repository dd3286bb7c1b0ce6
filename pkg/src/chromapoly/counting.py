"""Exact counting of colorings and assembly of counting polynomials.

The two independent routes everything else is checked against:

* ``brute_count_at`` -- plain enumeration of all k^D colorings; the oracle.
* ``exact_color_count`` -- i! times the number of set partitions of the
  domain into exactly i blocks whose canonical coloring satisfies the
  property.  Valid whenever the property passes the polynomiality audit;
  feeds the binomial-basis polynomial directly.

Fast special cases (the harmonious per-k algorithm, the convex/cocircuit
count) and the interpolation chains that recover a polynomial from shifted
evaluations live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial

from .errors import BudgetExceededError, NotPolynomialError
from .graphs import (
    Graph, bits, cocircuit_counts, complete_graph, connected_components,
    disjoint_union, fingerprint, induced_subgraph, is_isomorphic, join,
    line_graph, star_graph, strip_isolated,
)
from .polynomials import (
    Poly, bell_number, from_binomial, lagrange_interpolate, stirling2,
)
from .properties import ColoringProperty, harmonious_property, proper_property

DEFAULT_BUDGET = 10 ** 8

_PROPER = proper_property()
_HARMONIOUS = harmonious_property()


def _budget(budget: int | None) -> int:
    return DEFAULT_BUDGET if budget is None else budget


def _check_budget(cost: int, budget: int | None, what: str):
    limit = _budget(budget)
    if cost > limit:
        raise BudgetExceededError(cost, limit, what)


def _domain_size(g: Graph, prop: ColoringProperty) -> int:
    if prop.domain == "vertex":
        return g.n
    if not g.simple:
        raise ValueError("edge colorings are defined on simple graphs")
    return g.edge_count


def _sum_tasks(tasks, fn, workers: int) -> int:
    """Deterministic sum of independent subcounts; worker count never
    changes the result, only the scheduling."""
    if workers <= 1 or len(tasks) <= 1:
        return sum(fn(t) for t in tasks)
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(fn, tasks))


# ---------------------------------------------------------------------------
# the two exact routes

def brute_count_at(g: Graph, prop: ColoringProperty, k: int,
                   budget: int | None = None, workers: int = 1) -> int:
    """Count colorings with palette [k] by full enumeration."""
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    d = _domain_size(g, prop)
    _check_budget(k ** d if k >= 2 else 1, budget, "coloring enumeration")
    checker = prop.checker
    if d == 0:
        return 1 if checker(g, (), k) else 0
    if k == 0:
        return 0
    if workers <= 1:
        return sum(1 for colors in product(range(1, k + 1), repeat=d)
                   if checker(g, colors, k))

    def count_with_first(c1: int) -> int:
        return sum(1 for rest in product(range(1, k + 1), repeat=d - 1)
                   if checker(g, (c1,) + rest, k))

    return _sum_tasks(list(range(1, k + 1)), count_with_first, workers)


def exact_color_count(g: Graph, prop: ColoringProperty, i: int,
                      budget: int | None = None, workers: int = 1) -> int:
    """Number of colorings that use exactly i colors (all i present).

    Computed as i! times the number of set partitions of the domain into
    exactly i blocks whose canonical block coloring satisfies the property;
    partitions are enumerated as restricted-growth strings.
    """
    if i < 0:
        raise ValueError("color count must be nonnegative")
    d = _domain_size(g, prop)
    checker = prop.checker
    if i == 0:
        return 1 if d == 0 and checker(g, (), 0) else 0
    if i > d:
        return 0
    if not prop.known_polynomial:
        # the partition route assumes the count depends only on |I|; for a
        # suspect property fall back to inclusion-exclusion over plain
        # counts, yielding colorings with range exactly the first i colors
        return sum((-1) ** (i - j) * comb(i, j)
                   * brute_count_at(g, prop, j, budget) for j in range(i + 1))
    _check_budget(stirling2(d, i), budget, "partition enumeration")

    def complete(prefix: tuple[int, ...], used: int) -> int:
        arr = list(prefix) + [0] * (d - len(prefix))

        def rec(pos: int, used: int) -> int:
            if d - pos < i - used:
                return 0
            if pos == d:
                return 1 if used == i and checker(g, tuple(arr), i) else 0
            total = 0
            for b in range(1, used + 1):
                arr[pos] = b
                total += rec(pos + 1, used)
            if used < i:
                arr[pos] = used + 1
                total += rec(pos + 1, used + 1)
            return total

        return rec(len(prefix), used)

    if workers <= 1:
        return factorial(i) * complete((1,), 1)

    depth = min(d, 4)
    prefixes: list[tuple[tuple[int, ...], int]] = []

    def expand(prefix: tuple[int, ...], used: int):
        if len(prefix) == depth:
            prefixes.append((prefix, used))
            return
        for b in range(1, used + 1):
            expand(prefix + (b,), used)
        if used < i:
            expand(prefix + (used + 1,), used + 1)

    expand((1,), 1)
    total = _sum_tasks(prefixes, lambda pu: complete(pu[0], pu[1]), workers)
    return factorial(i) * total


@dataclass(frozen=True)
class CountProfile:
    """The exact-i-color counts c(1..D) for one graph and property."""
    exact_counts: tuple[int, ...]
    property_name: str
    graph: str


def count_profile(g: Graph, prop: ColoringProperty,
                  budget: int | None = None, workers: int = 1) -> CountProfile:
    d = _domain_size(g, prop)
    counts = tuple(exact_color_count(g, prop, i, budget, workers)
                   for i in range(1, d + 1))
    return CountProfile(counts, prop.name, fingerprint(g))


def hat_chi(g: Graph, prop: ColoringProperty, k: int,
            budget: int | None = None) -> int:
    """Colorings using exactly k colors; the binomial-basis coefficient c(k)."""
    return exact_color_count(g, prop, k, budget)


def chi_polynomial(g: Graph, prop: ColoringProperty,
                   budget: int | None = None, workers: int = 1,
                   audit: str = "auto") -> Poly:
    """The counting polynomial in the binomial basis, coefficients c(0..D).

    Properties not known to be palette-stable are audited first; a failing
    audit raises NotPolynomialError because the counts then do not assemble
    into a polynomial (callers should report per-k counts instead).
    """
    if audit not in ("auto", "always", "skip"):
        raise ValueError(f"unknown audit mode: {audit!r}")
    if audit == "always" or (audit == "auto" and not prop.known_polynomial):
        report = polynomiality_audit(g, prop, k_max=4, budget=budget)
        if not report.passed():
            raise NotPolynomialError(report)
    d = _domain_size(g, prop)
    _check_budget(bell_number(d), budget, "partition enumeration")
    coeffs = [exact_color_count(g, prop, i, budget, workers)
              for i in range(d + 1)]
    return from_binomial(coeffs)


# ---------------------------------------------------------------------------
# polynomiality audit

@dataclass(frozen=True)
class AuditReport:
    property_name: str
    graph: str
    k_max: int
    a_violations: tuple
    b_violations: tuple

    @property
    def condition_a_ok(self) -> bool:
        return not self.a_violations

    @property
    def condition_b_ok(self) -> bool:
        return not self.b_violations

    def passed(self) -> bool:
        return self.condition_a_ok and self.condition_b_ok

    def summary(self) -> str:
        flags = []
        if self.a_violations:
            flags.append("size-symmetry (A) violated")
        if self.b_violations:
            flags.append("palette-independence (B) violated")
        return "; ".join(flags) if flags else "pass"


def _subsets(k: int):
    for mask in range(1 << k):
        yield frozenset(c + 1 for c in range(k) if (mask >> c) & 1)


def polynomiality_audit(g: Graph, prop: ColoringProperty, k_max: int = 4,
                        budget: int | None = None) -> AuditReport:
    """Empirically test the two conditions that make counts polynomial.

    (A) the exact-color count depends on a color set only through its size;
    (B) the count for a fixed color set does not depend on the palette size.
    """
    d = _domain_size(g, prop)
    _check_budget(sum(k ** d if k >= 2 else 1 for k in range(1, k_max + 1)),
                  budget, "audit enumeration")
    checker = prop.checker
    counts: dict[int, dict[frozenset, int]] = {}
    for k in range(1, k_max + 1):
        table = {s: 0 for s in _subsets(k)}
        if d == 0:
            if checker(g, (), k):
                table[frozenset()] += 1
        else:
            for colors in product(range(1, k + 1), repeat=d):
                if checker(g, colors, k):
                    table[frozenset(colors)] += 1
        counts[k] = table

    a_violations = []
    for k in range(1, k_max + 1):
        by_size: dict[int, dict[frozenset, int]] = {}
        for subset, c in counts[k].items():
            by_size.setdefault(len(subset), {})[subset] = c
        for size, table in sorted(by_size.items()):
            if len(set(table.values())) > 1:
                a_violations.append(
                    (k, size, tuple(sorted((tuple(sorted(s)), c)
                                           for s, c in table.items()))))

    b_violations = []
    for k1 in range(1, k_max + 1):
        for k2 in range(k1 + 1, k_max + 1):
            for subset, c1 in counts[k1].items():
                c2 = counts[k2][subset]
                if c1 != c2:
                    b_violations.append(
                        (tuple(sorted(subset)), k1, k2, c1, c2))

    return AuditReport(prop.name, fingerprint(g), k_max,
                       tuple(a_violations), tuple(b_violations))



# ---------------------------------------------------------------------------
# fast special cases

def harmonious_fast(g: Graph, k: int, budget: int | None = None) -> int:
    """Per-k harmonious count: edge-bound short circuit, strip isolated
    vertices, enumerate only on the small core, multiply by k**isolated."""
    if not g.simple:
        raise ValueError("harmonious counting is defined on simple graphs")
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    if g.edge_count >= k * (k - 1) // 2 + 1:
        return 0
    core, isolated = strip_isolated(g)
    return k ** isolated * brute_count_at(core, _HARMONIOUS, k, budget)


def convex_fast(g: Graph, k: int) -> int:
    """Convex count for k <= 2 via components and cocircuits."""
    if k not in (0, 1, 2):
        raise ValueError("fast convex path covers k in {0, 1, 2}")
    if g.n == 0:
        return 1
    if k == 0:
        return 0
    ncomp = len(connected_components(g))
    if k == 1:
        return 1 if ncomp == 1 else 0
    if ncomp >= 3:
        return 0
    if ncomp == 2:
        return 2
    if g.n == 1:
        return 2
    total, _ = cocircuit_counts(g)
    return 2 + 2 * total


def edge_chi_polynomial(g: Graph, budget: int | None = None,
                        workers: int = 1) -> Poly:
    """Proper edge colorings, via the chromatic polynomial of the line graph."""
    return chi_polynomial(line_graph(g), _PROPER, budget, workers)


def edge_chi(g: Graph, k: int, budget: int | None = None) -> int:
    value = edge_chi_polynomial(g, budget).eval(k)
    return int(value)


# ---------------------------------------------------------------------------
# pruned enumeration (definition-sound backtracking, for larger gadget graphs)

def pruned_count_at(g: Graph, prop: ColoringProperty, k: int,
                    budget: int | None = None) -> int:
    """Same count as brute_count_at, via backtracking with monotone pruning.

    Sound for the class-local families whose violations only grow: a
    monochromatic component larger than the family bound can never recover,
    so the branch is cut as soon as one appears.  Monochromatic components
    are maintained incrementally as disjoint bitmasks per color.  Falls back
    to plain enumeration for other properties.
    """
    if prop.domain != "vertex":
        return brute_count_at(g, prop, k, budget)
    if prop.family == "mcc":
        bound, pattern = prop.param, None
    elif prop.family == "du":
        bound, pattern = prop.param.n, prop.param
    elif prop.family == "proper":
        bound, pattern = 1, None
    else:
        return brute_count_at(g, prop, k, budget)
    if k == 0 or g.n == 0:
        return 1 if g.n == 0 else 0

    adj = g.adj
    n = g.n
    limit = _budget(budget)
    steps = 0
    comps: list[list[int]] = [[] for _ in range(k)]  # per color, disjoint masks

    def final_ok() -> bool:
        if pattern is None:
            return True
        pn = pattern.n
        for per_color in comps:
            for comp in per_color:
                if comp.bit_count() != pn:
                    return False
                if not is_isomorphic(induced_subgraph(g, bits(comp)), pattern):
                    return False
        return True

    def rec(v: int) -> int:
        nonlocal steps
        steps += 1
        if steps > limit:
            raise BudgetExceededError(steps, limit, "pruned enumeration")
        if v == n:
            return 1 if final_ok() else 0
        total = 0
        bit = 1 << v
        nb = adj[v]
        # color symmetry: the first vertex pins one color class
        palette = 1 if v == 0 else k
        for c in range(palette):
            per_color = comps[c]
            touched = bit
            keep = []
            for m in per_color:
                if m & nb:
                    touched |= m
                else:
                    keep.append(m)
            if touched.bit_count() > bound:
                continue
            keep.append(touched)
            comps[c] = keep
            total += rec(v + 1)
            comps[c] = per_color
        return total

    return k * rec(0)


def count_clique_partitions(g: Graph, alpha: int) -> int:
    """Partitions of the vertex set into blocks each inducing a complete
    graph on alpha vertices, counted directly."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if g.n % alpha:
        return 0
    if not g.simple:
        raise ValueError("defined on simple graphs")
    from itertools import combinations
    adj = g.adj

    def rec(mask: int) -> int:
        if mask == 0:
            return 1
        v = (mask & -mask).bit_length() - 1
        if alpha == 1:
            return rec(mask & ~(1 << v))
        total = 0
        candidates = bits(adj[v] & mask)
        for combo in combinations(candidates, alpha - 1):
            ok = True
            for i, a in enumerate(combo):
                for b in combo[i + 1:]:
                    if not (adj[a] >> b) & 1:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                block = (1 << v) | sum(1 << u for u in combo)
                total += rec(mask & ~block)
        return total

    return rec((1 << g.n) - 1)


# ---------------------------------------------------------------------------
# interpolation chains

def _falling_value(x: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= x - i
    return out


def interpolation_chain(g: Graph, prop: ColoringProperty, construction: str,
                        max_n: int, point: int | None = None,
                        budget: int | None = None) -> Poly:
    """Recover the counting polynomial from evaluations of a constructed
    graph family at one fixed point, dividing out the known cofactor.

    ``max_n`` must be at least the degree of the target polynomial.  The
    default evaluation point is the smallest integer >= max_n + 1 at which
    every cofactor in the chain is nonzero.
    """
    c = construction.lower()
    if c in ("join_kn", "join"):
        if prop.family != "proper":
            raise ValueError("join chain applies to proper colorings")
        a = max_n + 1 if point is None else point
        pts = []
        for m in range(max_n + 1):
            cof = _falling_value(a, m)
            if cof == 0:
                raise ValueError(
                    f"cofactor vanishes at point {a}; choose a different point")
            val = brute_count_at(join(g, complete_graph(m)), prop, a, budget)
            pts.append((Fraction(a - m), Fraction(val, cof)))
        return lagrange_interpolate(pts)

    if c in ("box_join", "box_join_h", "box"):
        if prop.family != "du":
            raise ValueError("box-join chain applies to du colorings")
        pattern = prop.param
        a = max_n + 1 if point is None else point
        pts = []
        gi = g
        from .graphs import box_join
        for i in range(max_n + 1):
            cof = _falling_value(a, i)
            if cof == 0:
                raise ValueError(
                    f"cofactor vanishes at point {a}; choose a different point")
            val = brute_count_at(gi, prop, a, budget)
            pts.append((Fraction(a - i), Fraction(val, cof)))
            if i < max_n:
                gi = box_join(gi, pattern, 0)
        return lagrange_interpolate(pts)

    if c in ("disjoint_star", "star"):
        if prop.family != "proper":
            raise ValueError("star chain applies to proper colorings")
        e = g.edge_count
        a = e + max_n + 2 if point is None else point
        pts = []
        for m in range(max_n + 1):
            km = a - e - m
            cof = km * (km - 1) ** m
            if km < 0 or cof == 0:
                raise ValueError(
                    f"cofactor vanishes at point {a}; choose a different point")
            val = brute_count_at(disjoint_union(g, star_graph(m)), prop, km,
                                 budget)
            pts.append((Fraction(km), Fraction(val, cof)))
        return lagrange_interpolate(pts)

    raise ValueError(f"unknown chain construction: {construction!r}")
