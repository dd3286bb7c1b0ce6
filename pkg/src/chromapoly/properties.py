"""Machine-checkable coloring properties.

A property is a predicate on (graph, coloring) pairs, closed under color
permutations and graph automorphisms.  The named properties here are the
concrete families the counting engine supports; the two-level class/pair
framework (`PairProperty`) expresses most of them uniformly and is kept as an
independent cross-check.

Checkers receive the raw color tuple plus the palette size; colors are 1..k.
Only the t-improper checker honors edge multiplicities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .graphs import (
    Graph, bits, complete_graph, cycle_graph, edgeless_graph, induced_subgraph,
    is_connected, is_isomorphic, mask_components, mask_connected, path_graph,
    star_graph,
)

Checker = Callable[[Graph, tuple, int], bool]


@dataclass(frozen=True)
class Coloring:
    domain: str                # "vertex" | "edge"
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.domain not in ("vertex", "edge"):
            raise ValueError(f"unknown coloring domain: {self.domain!r}")
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ValueError("color values must lie in 1..k")

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.colors)


@dataclass(frozen=True)
class ColoringProperty:
    name: str
    domain: str
    checker: Checker
    family: str = ""           # machine tag for fast paths and pruning
    param: object = None       # t for mcc/t-improper, pattern graph otherwise
    known_polynomial: bool = True


def check(prop: ColoringProperty, g: Graph, coloring: Coloring) -> bool:
    if coloring.domain != prop.domain:
        raise ValueError(f"{prop.name} expects a {prop.domain} coloring")
    size = g.n if prop.domain == "vertex" else g.edge_count
    if len(coloring.colors) != size:
        raise ValueError("coloring must be total on its domain")
    return prop.checker(g, coloring.colors, coloring.k)


def _class_masks(colors) -> dict:
    masks: dict = {}
    for v, c in enumerate(colors):
        masks[c] = masks.get(c, 0) | (1 << v)
    return masks


# ---------------------------------------------------------------------------
# vertex checkers

def _trivial(g, colors, k):
    return True


def _proper(g, colors, k):
    for u, v in g.edges:
        if colors[u] == colors[v]:
            return False
    return True


def _harmonious(g, colors, k):
    seen = set()
    for u, v in g.edges:
        a, b = colors[u], colors[v]
        if a == b:
            return False
        pair = (a, b) if a < b else (b, a)
        if pair in seen:
            return False
        seen.add(pair)
    return True


def _convex(g, colors, k):
    for mask in _class_masks(colors).values():
        if not mask_connected(g.adj, mask):
            return False
    return True


def _make_mcc(t: int) -> Checker:
    def chk(g, colors, k):
        for mask in _class_masks(colors).values():
            for comp in mask_components(g.adj, mask):
                if comp.bit_count() > t:
                    return False
        return True
    return chk


def _component_matches(g: Graph, comp_mask: int, pattern: Graph) -> bool:
    verts = bits(comp_mask)
    if len(verts) != pattern.n:
        return False
    return is_isomorphic(induced_subgraph(g, verts), pattern)


def induces_copy_union(g: Graph, class_vertices, pattern: Graph) -> bool:
    """Does the class induce a disjoint union of copies of the pattern graph?

    The pattern must be connected and nonempty; empty classes qualify.
    """
    if pattern.n < 1:
        raise ValueError("pattern graph must have at least one vertex")
    if not is_connected(pattern):
        raise ValueError("pattern graph must be connected")
    mask = 0
    for v in class_vertices:
        mask |= 1 << v
    for comp in mask_components(g.adj, mask):
        if not _component_matches(g, comp, pattern):
            return False
    return True


def _make_du(pattern: Graph) -> Checker:
    if not is_connected(pattern) or pattern.n < 1:
        raise ValueError("pattern graph must be connected and nonempty")

    def chk(g, colors, k):
        pn = pattern.n
        for mask in _class_masks(colors).values():
            for comp in mask_components(g.adj, mask):
                if comp.bit_count() != pn or not _component_matches(g, comp, pattern):
                    return False
        return True
    return chk


def _make_hfree(pattern: Graph) -> Checker:
    # every color class induces a graph with no induced copy of the pattern
    if pattern.n < 1:
        raise ValueError("pattern graph must have at least one vertex")

    def chk(g, colors, k):
        pn = pattern.n
        for mask in _class_masks(colors).values():
            verts = bits(mask)
            if len(verts) < pn:
                continue
            for sub in combinations(verts, pn):
                if is_isomorphic(induced_subgraph(g, sub), pattern):
                    return False
        return True
    return chk


def _make_timproper(t: int) -> Checker:
    def chk(g, colors, k):
        # class degree counts parallel edges
        load = [0] * g.n
        for (u, v), m in zip(g.edges, g.mult):
            if colors[u] == colors[v]:
                load[u] += m
                load[v] += m
                if load[u] > t or load[v] > t:
                    return False
        return True
    return chk


def _acyclic(g, colors, k):
    if not _proper(g, colors, k):
        return False
    masks = _class_masks(colors)
    used = sorted(masks)
    for a, b in combinations(used, 2):
        union = masks[a] | masks[b]
        e_in = sum(1 for u, v in g.edges
                   if (union >> u) & 1 and (union >> v) & 1)
        n_in = union.bit_count()
        n_comp = len(mask_components(g.adj, union))
        if e_in != n_in - n_comp:   # a cycle inside the two-class union
            return False
    return True


def _cocolor(g, colors, k):
    for mask in _class_masks(colors).values():
        sz = mask.bit_count()
        e_in = sum(1 for u, v in g.edges
                   if (mask >> u) & 1 and (mask >> v) & 1)
        if e_in != 0 and e_in != sz * (sz - 1) // 2:
            return False
    return True


def _injective(g, colors, k):
    for v in range(g.n):
        seen = set()
        m = g.adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            c = colors[w]
            if c in seen:
                return False
            seen.add(c)
    return True


# ---------------------------------------------------------------------------
# edge checkers

def _edge_proper(g, colors, k):
    for v in range(g.n):
        seen = set()
        for i, (a, b) in enumerate(g.edges):
            if v == a or v == b:
                c = colors[i]
                if c in seen:
                    return False
                seen.add(c)
    return True


def _rainbow(g, colors, k):
    # every vertex pair joined by a path with pairwise distinct edge colors;
    # rainbow walks reduce to rainbow paths, so search (vertex, color-set) states
    n = g.n
    if n <= 1:
        return True
    if not is_connected(g):
        return False
    inc = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        inc[u].append((v, i))
        inc[v].append((u, i))
    for s in range(n - 1):
        reached = 1 << s
        seen_states = set()
        stack = [(s, 0)]
        while stack:
            v, used = stack.pop()
            for w, ei in inc[v]:
                cbit = 1 << colors[ei]
                if used & cbit:
                    continue
                state = (w, used | cbit)
                if state in seen_states:
                    continue
                seen_states.add(state)
                reached |= 1 << w
                stack.append(state)
        if reached != (1 << n) - 1:
            return False
    return True


# ---------------------------------------------------------------------------
# audit counterexamples: properties that are not palette-stable

def _surjective_proper(g, colors, k):
    # proper and all k colors used: the count depends on the palette size
    return _proper(g, colors, k) and len(set(colors)) == k


def _degree_determined(g, colors, k):
    # proper and f(v) = degree(v) + 1: size-symmetry over color sets fails
    if any(colors[v] != g.adj[v].bit_count() + 1 for v in range(g.n)):
        return False
    return _proper(g, colors, k)


# ---------------------------------------------------------------------------
# property constructors

def trivial_property() -> ColoringProperty:
    return ColoringProperty("trivial", "vertex", _trivial, family="trivial")


def proper_property() -> ColoringProperty:
    return ColoringProperty("proper", "vertex", _proper, family="proper")


def harmonious_property() -> ColoringProperty:
    return ColoringProperty("harmonious", "vertex", _harmonious, family="harmonious")


def convex_property() -> ColoringProperty:
    return ColoringProperty("convex", "vertex", _convex, family="convex")


def mcc_property(t: int) -> ColoringProperty:
    if t < 1:
        raise ValueError("mcc needs t >= 1")
    return ColoringProperty(f"mcc:t={t}", "vertex", _make_mcc(t), family="mcc", param=t)


def du_property(pattern: Graph) -> ColoringProperty:
    return ColoringProperty(f"du:H={graph_token(pattern)}", "vertex",
                            _make_du(pattern), family="du", param=pattern)


def h_free_property(pattern: Graph) -> ColoringProperty:
    return ColoringProperty(f"hfree:H={graph_token(pattern)}", "vertex",
                            _make_hfree(pattern), family="hfree", param=pattern)


def t_improper_property(t: int) -> ColoringProperty:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return ColoringProperty(f"timp:t={t}", "vertex", _make_timproper(t),
                            family="timp", param=t)


def acyclic_property() -> ColoringProperty:
    return ColoringProperty("acyclic", "vertex", _acyclic, family="acyclic")


def cocolor_property() -> ColoringProperty:
    return ColoringProperty("cocolor", "vertex", _cocolor, family="cocolor")


def injective_property() -> ColoringProperty:
    return ColoringProperty("injective", "vertex", _injective, family="injective")


def edge_proper_property() -> ColoringProperty:
    return ColoringProperty("edge", "edge", _edge_proper, family="edge")


def rainbow_property() -> ColoringProperty:
    return ColoringProperty("rainbow", "edge", _rainbow, family="rainbow")


def surjective_proper_property() -> ColoringProperty:
    return ColoringProperty("surjective-proper", "vertex", _surjective_proper,
                            family="counterexample", known_polynomial=False)


def degree_determined_property() -> ColoringProperty:
    return ColoringProperty("degree-determined", "vertex", _degree_determined,
                            family="counterexample", known_polynomial=False)


# ---------------------------------------------------------------------------
# class/pair framework

GraphPredicate = Callable[[Graph], bool]


@dataclass(frozen=True)
class PairProperty:
    """Vertex colorings whose classes satisfy one graph predicate and whose
    two-class unions satisfy another."""
    class_pred: GraphPredicate
    pair_pred: GraphPredicate
    class_name: str = ""
    pair_name: str = ""


def pair_check(pp: PairProperty, g: Graph, colors, k: int) -> bool:
    masks = _class_masks(colors)
    subs = {}
    for c in range(1, k + 1):
        subs[c] = induced_subgraph(g, bits(masks.get(c, 0)))
        if not pp.class_pred(subs[c]):
            return False
    for a, b in combinations(range(1, k + 1), 2):
        union = masks.get(a, 0) | masks.get(b, 0)
        if not pp.pair_pred(induced_subgraph(g, bits(union))):
            return False
    return True


def pair_property(pp: PairProperty) -> ColoringProperty:
    name = f"pair:p1={pp.class_name},p2={pp.pair_name}"
    return ColoringProperty(name, "vertex",
                            lambda g, colors, k: pair_check(pp, g, colors, k),
                            family="pair", param=pp)


def _pred_all(h: Graph) -> bool:
    return True


def _pred_edgeless(h: Graph) -> bool:
    return h.edge_count == 0


def _pred_connected(h: Graph) -> bool:
    return is_connected(h)


def _pred_forest(h: Graph) -> bool:
    from .graphs import connected_components
    comps = connected_components(h) if h.n else []
    return h.edge_count == h.n - len(comps) if h.n else True


def _pred_max1edge(h: Graph) -> bool:
    return h.edge_count <= 1


def _pred_clique_or_edgeless(h: Graph) -> bool:
    return h.edge_count == 0 or h.edge_count == h.n * (h.n - 1) // 2


def _pred_max_degree(t: int) -> GraphPredicate:
    return lambda h: all(h.degree(v) <= t for v in range(h.n))


def _pred_component_size(t: int) -> GraphPredicate:
    def pred(h: Graph) -> bool:
        full = (1 << h.n) - 1
        return all(c.bit_count() <= t for c in mask_components(h.adj, full))
    return pred


def _pred_du(pattern: Graph) -> GraphPredicate:
    return lambda h: induces_copy_union(h, range(h.n), pattern)


def _pred_hfree(pattern: Graph) -> GraphPredicate:
    def pred(h: Graph) -> bool:
        if h.n < pattern.n:
            return True
        for sub in combinations(range(h.n), pattern.n):
            if is_isomorphic(induced_subgraph(h, sub), pattern):
                return False
        return True
    return pred


def table_pair_property(name: str, param=None) -> PairProperty:
    """The class/pair instantiation of a named property family."""
    rows: dict[str, tuple[GraphPredicate, str, GraphPredicate, str]] = {
        "trivial": (_pred_all, "all", _pred_all, "all"),
        "proper": (_pred_edgeless, "edgeless", _pred_all, "all"),
        "acyclic": (_pred_edgeless, "edgeless", _pred_forest, "forest"),
        "convex": (_pred_connected, "connected", _pred_all, "all"),
        "harmonious": (_pred_edgeless, "edgeless", _pred_max1edge, "max1edge"),
    }
    if name in rows:
        p1, n1, p2, n2 = rows[name]
        return PairProperty(p1, p2, n1, n2)
    if name == "mcc":
        return PairProperty(_pred_component_size(param), _pred_all,
                            f"compsize{param}", "all")
    if name == "du":
        return PairProperty(_pred_du(param), _pred_all,
                            f"du{graph_token(param)}", "all")
    if name == "timp":
        return PairProperty(_pred_max_degree(param), _pred_all,
                            f"maxdeg{param}", "all")
    if name == "cocolor":
        return PairProperty(_pred_clique_or_edgeless, _pred_all,
                            "cliqueoredgeless", "all")
    if name == "hfree":
        return PairProperty(_pred_hfree(param), _pred_all,
                            f"hfree{graph_token(param)}", "all")
    raise ValueError(f"no class/pair row for {name!r}")


# ---------------------------------------------------------------------------
# token parsing

_GRAPH_TOKEN = re.compile(r"^([KPCE])(\d+)$|^star(\d+)$", re.IGNORECASE)


def parse_graph_token(token: str) -> Graph:
    m = _GRAPH_TOKEN.match(token.strip())
    if not m:
        raise ValueError(f"unknown graph token: {token!r}")
    if m.group(3) is not None:
        return star_graph(int(m.group(3)))
    kind, size = m.group(1).upper(), int(m.group(2))
    makers = {"K": complete_graph, "P": path_graph,
              "C": cycle_graph, "E": edgeless_graph}
    return makers[kind](size)


def graph_token(g: Graph) -> str:
    """Best-effort compact name; falls back to a size tag."""
    n, m = g.n, g.edge_count
    if m == n * (n - 1) // 2:
        return f"K{n}"
    if m == 0:
        return f"E{n}"
    degs = sorted(g.degree(v) for v in range(n))
    if m == n - 1 and degs.count(1) == 2 and degs[-1] <= 2:
        return f"P{n}"
    if m == n and all(d == 2 for d in degs):
        return f"C{n}"
    if m == n - 1 and degs[-1] == m:
        return f"star{m}"
    return f"g{n}e{m}"


_PAIR_PRED_TOKEN = re.compile(
    r"^(all|edgeless|connected|forest|max1edge|cliqueoredgeless)$"
    r"|^maxdeg(\d+)$|^compsize(\d+)$|^du(\w+)$|^hfree(\w+)$")


def _parse_pair_pred(token: str) -> tuple[GraphPredicate, str]:
    t = token.strip().lower()
    m = _PAIR_PRED_TOKEN.match(t)
    if not m:
        raise ValueError(f"unknown graph-class token: {token!r}")
    if m.group(1):
        named = {"all": _pred_all, "edgeless": _pred_edgeless,
                 "connected": _pred_connected, "forest": _pred_forest,
                 "max1edge": _pred_max1edge,
                 "cliqueoredgeless": _pred_clique_or_edgeless}
        return named[m.group(1)], m.group(1)
    if m.group(2):
        return _pred_max_degree(int(m.group(2))), t
    if m.group(3):
        return _pred_component_size(int(m.group(3))), t
    if m.group(4):
        return _pred_du(parse_graph_token(m.group(4))), t
    return _pred_hfree(parse_graph_token(m.group(5))), t


_PREFIXED_NAME = re.compile(r"^[^:=,]*:(surjective-proper|degree-determined)$")


def parse_property(token: str) -> ColoringProperty:
    """Resolve a CLI property token like ``proper``, ``mcc:t=2`` or ``du:H=K3``.

    The audit counterexamples also accept an arbitrary display prefix before
    the colon, e.g. ``anything:surjective-proper``.
    """
    token = token.strip()
    prefixed = _PREFIXED_NAME.match(token)
    if prefixed:
        token = prefixed.group(1)
    plain = {
        "proper": proper_property, "harmonious": harmonious_property,
        "convex": convex_property, "edge": edge_proper_property,
        "acyclic": acyclic_property, "cocolor": cocolor_property,
        "injective": injective_property, "rainbow": rainbow_property,
        "trivial": trivial_property,
        "surjective-proper": surjective_proper_property,
        "degree-determined": degree_determined_property,
    }
    if token in plain:
        return plain[token]()
    if ":" not in token:
        raise ValueError(f"unknown property token: {token!r}")
    head, rest = token.split(":", 1)
    params = {}
    for item in rest.split(","):
        if "=" not in item:
            raise ValueError(f"malformed property parameter: {item!r}")
        key, value = item.split("=", 1)
        params[key.strip()] = value.strip()
    try:
        if head == "mcc":
            return mcc_property(int(params["t"]))
        if head == "timp":
            return t_improper_property(int(params["t"]))
        if head == "du":
            return du_property(parse_graph_token(params["H"]))
        if head == "hfree":
            return h_free_property(parse_graph_token(params["H"]))
        if head == "pair":
            p1, n1 = _parse_pair_pred(params["p1"])
            p2, n2 = _parse_pair_pred(params["p2"])
            return pair_property(PairProperty(p1, p2, n1, n2))
    except KeyError as exc:
        raise ValueError(f"property {head!r} is missing parameter {exc}") from None
    raise ValueError(f"unknown property token: {token!r}")
