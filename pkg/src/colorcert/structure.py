"""Structural recognizers and constructions for claw-free territory.

Covers claw detection, quasi-line tests, line-graph recognition by
edge-clique partitions, homogeneous clique pairs, linear/circular
interval orders, interval strip attachments and their reductions, strip
compositions over a hub multigraph, and the reducibility scanner that
hunts induced subgraphs carrying orientation or kernel certificates.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .graphs import ListSizeFn, MultiGraph, SimpleGraph, line_graph


def is_claw_free(g):
    """Return (True, None) or (False, (center, a, b, c))."""
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v))
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False, (v, a, b, c)
    return True, None


def is_quasi_line(g):
    """Every neighborhood coverable by two cliques.

    Equivalent to the complement of each open neighborhood being
    bipartite.  Returns (True, None) or (False, offending vertex).
    """
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v))
        if not _complement_bipartite(g, nbrs):
            return False, v
    return True, None


def _complement_bipartite(g, verts):
    color = {}
    for start in verts:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in verts:
                if y == x or g.has_edge(x, y):
                    continue
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


# ---------------------------------------------------------------------------
# line-graph recognition

def recognize_line_graph(g, cap=12):
    """Find a root multigraph whose line graph equals g exactly.

    Searches for an edge-clique partition in which every vertex lies in
    at most two parts; each part becomes a root vertex and each graph
    vertex becomes a root edge between its (one or two) parts.  Returns
    a MultiGraph whose line graph is g up to the construction's vertex
    order (verified before returning), or None.
    """
    if g.n > cap:
        raise ValueError(f"recognition capped at {cap} vertices")
    edges = g.edge_list()
    if not edges:
        # n isolated vertices: root is a matching of n edges
        return MultiGraph.from_edges(2 * g.n, [(2 * i, 2 * i + 1) for i in range(g.n)]) if g.n else MultiGraph.from_edges(0, [])

    all_cliques = []
    for size in range(2, g.n + 1):
        for vs in combinations(range(g.n), size):
            if g.is_clique(vs):
                all_cliques.append(frozenset(vs))
    all_cliques.sort(key=lambda c: (len(c), sorted(c)))

    def cover(remaining, used, load):
        # edge-clique cover with every vertex in at most two parts;
        # overlap on edges is allowed (parallel root edges share both
        # of their cliques)
        if not remaining:
            return list(used)
        pivot = min(remaining, key=lambda e: tuple(sorted(e)))
        for cl in all_cliques:
            if not pivot <= cl:
                continue
            if any(load[v] >= 2 for v in cl):
                continue
            inside = {frozenset(p) for p in combinations(sorted(cl), 2)}
            for v in cl:
                load[v] += 1
            used.append(cl)
            res = cover(remaining - inside, used, load)
            if res is not None:
                return res
            used.pop()
            for v in cl:
                load[v] -= 1
        return None

    load = [0] * g.n
    parts = cover(set(g.edges), [], load)
    if parts is None:
        return None
    # every vertex must end in exactly two parts; vertices in fewer
    # get private pendant parts
    membership = {v: [i for i, cl in enumerate(parts) if v in cl] for v in range(g.n)}
    extra = len(parts)
    root_edges = []
    for v in range(g.n):
        ms = membership[v]
        while len(ms) < 2:
            ms.append(extra)
            extra += 1
        root_edges.append((min(ms), max(ms), 1))
    root = MultiGraph.from_edges(extra, root_edges)
    lg, origin = line_graph(root)
    if not _isomorphic(lg, g):
        return None
    return root


def _isomorphic(g1, g2, return_map=False):
    """Brute-force isomorphism test for small graphs."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return (False, None) if return_map else False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return (False, None) if return_map else False
    d1, d2 = g1.degrees(), g2.degrees()
    for perm in permutations(range(g1.n)):
        if any(d1[v] != d2[perm[v]] for v in range(g1.n)):
            continue
        if all(g2.has_edge(perm[u], perm[v]) for u, v in g1.edge_list()):
            return (True, perm) if return_map else True
    return (False, None) if return_map else False


# ---------------------------------------------------------------------------
# homogeneous pairs

@dataclass(frozen=True)
class HomogeneousPair:
    a1: frozenset
    a2: frozenset


def find_homogeneous_pairs(g, nonlinear_only=False, cap=12):
    """All homogeneous pairs of cliques (|A1| + |A2| >= 3).

    A pair of disjoint cliques qualifies when every outside vertex is
    adjacent to all of A_i or none of A_i, for each i.  With
    nonlinear_only, keep only pairs whose union induces a 4-cycle.
    """
    if g.n > cap:
        raise ValueError(f"search capped at {cap} vertices")
    cliques = []
    for size in range(1, g.n + 1):
        for vs in combinations(range(g.n), size):
            if g.is_clique(vs):
                cliques.append(frozenset(vs))
    found = []
    for a1, a2 in combinations(cliques, 2):
        if a1 & a2 or len(a1) + len(a2) < 3:
            continue
        if not _homogeneous(g, a1, other=a2) or not _homogeneous(g, a2, other=a1):
            continue
        if nonlinear_only and not _contains_induced_c4(g, a1 | a2):
            continue
        found.append(HomogeneousPair(a1, a2))
    return found


def _homogeneous(g, aset, other=frozenset()):
    outside = set(range(g.n)) - aset - other
    for v in outside:
        hits = sum(1 for a in aset if g.has_edge(v, a))
        if hits not in (0, len(aset)):
            return False
    return True


def _contains_induced_c4(g, verts):
    for quad in combinations(sorted(verts), 4):
        sub, _ = g.induced(quad)
        if sorted(sub.degrees()) == [2, 2, 2, 2] and len(sub.edges) == 4 and sub.is_connected():
            return True
    return False


# ---------------------------------------------------------------------------
# linear / circular interval orders

def _is_linear_interval_order(g, order):
    """Every closed neighborhood is contiguous in the order."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        ps = sorted([pos[v]] + [pos[w] for w in g.neighbors(v) if w in pos])
        if ps[-1] - ps[0] != len(ps) - 1:
            return False
    return True


def is_linear_interval(g, cap=10):
    """A vertex order with contiguous neighborhoods, or None."""
    if g.n > cap:
        raise ValueError(f"search capped at {cap} vertices")
    if g.n <= 1:
        return list(range(g.n))
    for perm in permutations(range(g.n)):
        if perm[0] > perm[-1]:
            continue  # skip reversals
        if _is_linear_interval_order(g, list(perm)):
            return list(perm)
    return None


def is_circular_interval(g, cap=9):
    """A circular vertex order with contiguous arc neighborhoods, or None."""
    if g.n > cap:
        raise ValueError(f"search capped at {cap} vertices")
    if g.n <= 2:
        return list(range(g.n))
    n = g.n
    for perm in permutations(range(1, n)):
        order = [0] + list(perm)
        if order[1] > order[-1]:
            continue  # skip reflections
        pos = {v: i for i, v in enumerate(order)}
        ok = True
        for v in order:
            nbrs = {pos[w] for w in g.neighbors(v)}
            if not nbrs:
                continue
            # the closed neighborhood must form a circular arc
            block = nbrs | {pos[v]}
            if not _is_circular_arc(block, n):
                ok = False
                break
        if ok:
            return order
    return None


def _is_circular_arc(posset, n):
    """A position set is an arc iff it or its complement is contiguous."""
    if len(posset) >= n:
        return True
    ps = sorted(posset)
    if ps[-1] - ps[0] == len(ps) - 1:
        return True
    comp = sorted(set(range(n)) - posset)
    return comp[-1] - comp[0] == len(comp) - 1


# ---------------------------------------------------------------------------
# interval strips (2-joins)

@dataclass(frozen=True)
class TwoJoin:
    h: frozenset  # strip vertex set
    a1: frozenset
    a2: frozenset
    b1: frozenset
    b2: frozenset

    def to_json(self):
        return {
            "H": sorted(self.h), "A1": sorted(self.a1), "A2": sorted(self.a2),
            "B1": sorted(self.b1), "B2": sorted(self.b2),
        }

    @staticmethod
    def from_json(doc):
        return TwoJoin(
            frozenset(doc["H"]), frozenset(doc["A1"]), frozenset(doc["A2"]),
            frozenset(doc["B1"]), frozenset(doc["B2"]),
        )


def verify_2join(g, tj, cap=10):
    """Check the four strip conditions; returns (True, None) or (False, why).

    (i) the strip induces a nonempty linear interval graph with the end
    cliques at its ends; (ii) A1, A2, B1, B2 are cliques; (iii) A1 is
    joined to B1 and A2 to B2; (iv) no other edges leave the strip.
    """
    h = tj.h
    if not h:
        return False, "(i) empty strip"
    if not (tj.a1 <= h and tj.a2 <= h):
        return False, "(i) end cliques not inside the strip"
    if h & (tj.b1 | tj.b2):
        return False, "(ii) outside cliques meet the strip"
    if len(h) > cap:
        raise ValueError(f"interval-order search capped at {cap} strip vertices")
    sub, order_map = g.induced(h)
    idx = {v: i for i, v in enumerate(order_map)}
    interval = _interval_order_with_ends(sub, {idx[v] for v in tj.a1}, {idx[v] for v in tj.a2})
    if interval is None:
        return False, "(i) strip is not a linear interval graph with the end cliques at its ends"
    for name, cl in (("A1", tj.a1), ("A2", tj.a2), ("B1", tj.b1), ("B2", tj.b2)):
        if not g.is_clique(sorted(cl)):
            return False, f"(ii) {name} is not a clique"
    for a in tj.a1:
        for b in tj.b1:
            if not g.has_edge(a, b):
                return False, "(iii) A1 not joined to B1"
    for a in tj.a2:
        for b in tj.b2:
            if not g.has_edge(a, b):
                return False, "(iii) A2 not joined to B2"
    outside = set(range(g.n)) - h
    for v in h:
        for w in outside:
            if not g.has_edge(v, w):
                continue
            ok = (v in tj.a1 and w in tj.b1) or (v in tj.a2 and w in tj.b2)
            if not ok:
                return False, "(iv) stray edge between the strip and the outside"
    return True, None


def _interval_order_with_ends(sub, a1_idx, a2_idx):
    """Linear interval order placing A1 first and A2 last, or None."""
    n = sub.n
    for perm in permutations(range(n)):
        order = list(perm)
        if set(order[: len(a1_idx)]) != a1_idx:
            continue
        if a2_idx and set(order[-len(a2_idx):]) != a2_idx:
            continue
        if _is_linear_interval_order(sub, order):
            return order
    return None


def reduce_2join(g, tj):
    """One reduction step on a canonical reducible strip.

    With v1 the leftmost strip vertex and C = N_H(v1) \\ A1, the strip
    is reducible on the A1 side when H is incomplete and the strip
    neighborhood of A1 equals C.  The reduction moves A1 (and the part
    of C inside A2) out of the strip: the new strip is
    H \\ (A1 ∪ (C ∩ A2)) with end cliques C \\ A2 and A2 \\ C, outside
    cliques A1 ∪ (C ∩ A2) and B2 ∪ (C ∩ A2).  The mirrored step applies
    on the A2 side.  The result is canonical, strictly smaller, and
    passes verify_2join.
    """
    if tj.a1 & tj.a2:
        raise ValueError("strip is not canonical (end cliques intersect)")
    ok, why = verify_2join(g, tj)
    if not ok:
        raise ValueError(f"invalid strip: {why}")
    sub, order_map = g.induced(tj.h)
    idx = {v: i for i, v in enumerate(order_map)}
    if sub.is_clique(range(sub.n)):
        raise ValueError("strip is complete, not reducible")
    order = _interval_order_with_ends(
        sub, {idx[v] for v in tj.a1}, {idx[v] for v in tj.a2}
    )

    def try_side(end_vertex, near, far, near_b, far_b):
        c = {w for w in tj.h if g.has_edge(end_vertex, w)} - near
        n_near = set()
        for a in near:
            n_near |= {w for w in tj.h if g.has_edge(a, w)}
        n_near -= near
        if n_near != c:
            return None
        moved = c & far
        return TwoJoin(
            frozenset(tj.h - near - moved),
            frozenset(c - far),
            frozenset(far - c),
            frozenset(near | moved),
            frozenset(far_b | moved),
        )

    v1 = order_map[order[0]]
    vt = order_map[order[-1]]
    res = try_side(v1, tj.a1, tj.a2, tj.b1, tj.b2)
    if res is None:
        mirrored = try_side(vt, tj.a2, tj.a1, tj.b2, tj.b1)
        if mirrored is None:
            raise ValueError("strip is not reducible")
        res = TwoJoin(mirrored.h, mirrored.a2, mirrored.a1, mirrored.b2, mirrored.b1)
    return res


# ---------------------------------------------------------------------------
# strip compositions

@dataclass(frozen=True)
class Strip:
    graph: SimpleGraph
    x: frozenset  # end clique attached to the edge's first endpoint
    y: frozenset  # end clique attached to the edge's second endpoint


@dataclass(frozen=True)
class CompositionSpec:
    hub_n: int
    hub_edges: tuple  # (u, v) pairs, u == v allowed (loops), repeats allowed
    strips: tuple  # one Strip per hub edge

    @staticmethod
    def from_json(doc):
        strips = []
        for s in doc["strips"]:
            graph = SimpleGraph.from_edges(s["n"], s["edges"])
            strips.append(Strip(graph, frozenset(s["X"]), frozenset(s["Y"])))
        return CompositionSpec(doc["hub_n"], tuple(tuple(e) for e in doc["hub_edges"]), tuple(strips))


def compose(spec):
    """Disjoint union of the strips with each hub-vertex class made a clique.

    The class of hub vertex v collects the X-clique of every hub edge
    leaving v and the Y-clique of every hub edge entering v; a loop at
    v contributes both of its ends.
    """
    if len(spec.strips) != len(spec.hub_edges):
        raise ValueError("one strip per hub edge required")
    for strip in spec.strips:
        for name, cl in (("X", frozenset(strip.x)), ("Y", frozenset(strip.y))):
            if not strip.graph.is_clique(sorted(cl)):
                raise ValueError(f"strip end {name} is not a clique")
            for v in cl:
                others = set(strip.graph.neighbors(v)) - cl
                if not strip.graph.is_clique(sorted(others)):
                    raise ValueError("strip end vertex with non-clique outside neighborhood")
    offsets = []
    total = 0
    for strip in spec.strips:
        offsets.append(total)
        total += strip.graph.n
    edges = []
    for strip, off in zip(spec.strips, offsets):
        edges.extend((u + off, v + off) for u, v in strip.graph.edge_list())
    classes = {v: set() for v in range(spec.hub_n)}
    for (u, v), strip, off in zip(spec.hub_edges, spec.strips, offsets):
        classes[u].update(x + off for x in frozenset(strip.x))
        classes[v].update(y + off for y in frozenset(strip.y))
    for cl in classes.values():
        edges.extend(combinations(sorted(cl), 2))
    seen = set()
    dedup = []
    for u, v in edges:
        key = frozenset((u, v))
        if key not in seen and u != v:
            seen.add(key)
            dedup.append((u, v))
    return SimpleGraph.from_edges(total, dedup)


# ---------------------------------------------------------------------------
# reducibility scanner

def bk_free_scan(g, delta=None, max_sub=None, high_low=None, kp_cap=8):
    """Hunt induced subgraphs carrying a certificate under the f_H budget.

    f_H(v) = d_H(v) - 1 + delta - d_G(v) for each vertex v of an
    induced subgraph H.  `delta` defaults to the maximum degree of g;
    `high_low`, when given, maps each vertex to its intended degree in
    a hypothetical host (overriding d_G).  For every induced subgraph
    up to max_sub vertices, tests the orientation certificate first and
    the kernel route (with doubling) second.  Returns a list of
    (vertex tuple, kind, certificate); empty means no reducible piece
    was found within the caps.
    """
    if delta is None:
        delta = g.max_degree()
    if max_sub is None:
        max_sub = g.n
    degs = list(g.degrees()) if high_low is None else [high_low[v] for v in range(g.n)]
    found = []
    for size in range(1, min(max_sub, g.n) + 1):
        for vs in combinations(range(g.n), size):
            sub, order = g.induced(vs)
            fvals = []
            ok = True
            for i, v in enumerate(order):
                fv = sub.degree(i) - 1 + delta - degs[v]
                if fv < 1:
                    ok = False
                    break
                fvals.append(fv)
            if not ok:
                continue
            f = ListSizeFn(tuple(fvals))
            from .alon_tarsi import is_f_AT

            at_ok, cert = is_f_AT(sub, f)
            if at_ok:
                found.append((vs, "orientation", cert))
                continue
            if sub.n <= kp_cap:
                kp = None
                from .kernel import is_f_KP

                kp = is_f_KP(sub, f, allow_doubling=True, cap=kp_cap)
                if kp is not None:
                    found.append((vs, "kernel", kp))
    return found
