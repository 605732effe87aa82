"""Kernels, kernel-perfect orientations, and certificates built from them.

A kernel of a digraph is an independent set (in the underlying support;
a bidirected pair counts as an edge) such that every vertex outside it
has an out-neighbor inside it.  A digraph is kernel-perfect when every
induced subdigraph has a kernel.  Kernel-perfect orientations with
out-degrees below a list-size budget certify both choosability and the
online game version of it.
"""

from itertools import combinations

from .graphs import Digraph, ListSizeFn, line_graph


def find_kernel(d, s=None):
    """Kernel of the subdigraph induced on s (default: all vertices).

    Candidates are tried by increasing size, lexicographically within a
    size; the first kernel found is returned, else None.
    """
    if s is None:
        s = range(d.n)
    verts = sorted(set(s))
    sset = set(verts)
    support_adj = {v: set() for v in verts}
    out_adj = {v: set() for v in verts}
    for u, v in d.arcs:
        if u in sset and v in sset:
            support_adj[u].add(v)
            support_adj[v].add(u)
            out_adj[u].add(v)
    for size in range(0, len(verts) + 1):
        for cand in combinations(verts, size):
            kset = set(cand)
            if any(support_adj[u] & kset for u in cand):
                continue  # not independent
            if all(out_adj[v] & kset for v in verts if v not in kset):
                return kset
    return None


def is_kernel_perfect(d, cap=12):
    """Exhaustive kernel-perfection check.

    Returns (True, None) or (False, first failing induced vertex set),
    scanning induced sets by increasing size then lexicographically.
    """
    if d.n > cap:
        raise ValueError(f"exhaustive check capped at {cap} vertices")
    for size in range(1, d.n + 1):
        for sub in combinations(range(d.n), size):
            if find_kernel(d, sub) is None:
                return False, set(sub)
    return True, None


# ---------------------------------------------------------------------------
# the line-graph characterization

def _cyclic_clique(d, g):
    """A maximal clique whose one-way arcs contain a directed cycle.

    A clique is transitively orientable up to bidirected pairs exactly
    when its one-way arcs are acyclic (they then extend to a linear
    order).  A one-way directed cycle inside a clique -- a directed
    triangle, or a longer cycle whose chords are all bidirected --
    leaves some induced subdigraph without a kernel.
    """
    strict = d.strict_arcs()
    for clique in _maximal_cliques(g):
        cl = set(clique)
        arcs = [(u, v) for u, v in strict if u in cl and v in cl]
        out = {v: [] for v in cl}
        for u, v in arcs:
            out[u].append(v)
        # cycle detection by iterated sink removal
        indeg = {v: 0 for v in cl}
        for u, v in arcs:
            indeg[v] += 1
        queue = [v for v in cl if indeg[v] == 0]
        removed = 0
        while queue:
            v = queue.pop()
            removed += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if removed != len(cl):
            return tuple(sorted(cl))
    return None


def _maximal_cliques(g):
    """Bron-Kerbosch over adjacency bitmasks."""
    masks = g.adjacency_masks()

    def expand(r, p, x):
        if not p and not x:
            yield [v for v in range(g.n) if r >> v & 1]
            return
        # pivot on a vertex covering the most of p
        cand = p
        pool = [v for v in range(g.n) if (p | x) >> v & 1]
        if pool:
            piv = max(pool, key=lambda v: bin(p & masks[v]).count("1"))
            cand = p & ~masks[piv]
        for v in [v for v in range(g.n) if cand >> v & 1]:
            yield from expand(r | 1 << v, p & masks[v], x & masks[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, (1 << g.n) - 1, 0)


def _chordless_strict_odd_cycle(d, max_len=9):
    """An induced directed odd cycle of length >= 5 using one-way arcs.

    Cycles through a bidirected pair always have a kernel available on
    the pair, and cycles with a chord are not minimal obstructions, so
    only chordless all-strict cycles are reported.
    """
    g = d.support()
    adj = g.adjacency_masks()
    strict = d.strict_arcs()
    strict_out = {v: set() for v in range(d.n)}
    for u, v in strict:
        strict_out[u].add(v)

    def extend(path, blocked):
        # blocked: support neighbors of internal path vertices (chords)
        start = path[0]
        last = path[-1]
        if len(path) >= 5 and len(path) % 2 == 1 and start in strict_out[last]:
            return list(path)
        if len(path) >= max_len:
            return None
        for w in sorted(strict_out[last]):
            if w <= start or w in path:
                continue
            if (blocked >> w) & 1:
                continue
            res = extend(path + [w], blocked | (adj[last] & ~(1 << w)))
            if res:
                return res
        return None

    for v in range(d.n):
        res = extend([v], 0)
        if res:
            return res
    return None


def kp_line_characterization(d, root, origin=None):
    """Decide kernel-perfection for an orientation of a line graph.

    The orientation must cover the line graph of `root` exactly (every
    edge gets one or both arc directions); `origin` may relabel the
    line-graph vertices by giving the root edge of each.  The digraph
    is kernel-perfect iff every clique's one-way arcs are acyclic (so
    every clique is oriented transitively, up to bidirected pairs) and
    no chordless directed odd cycle of one-way arcs exists.
    """
    if origin is None:
        lg, _ = line_graph(root)
    else:
        lg = _line_graph_from_origin(root, origin)
    if d.support().edges != lg.edges or d.n != lg.n:
        raise ValueError("digraph support is not the line graph of the root")
    if _cyclic_clique(d, lg) is not None:
        return False
    if _chordless_strict_odd_cycle(d) is not None:
        return False
    return True


def _line_graph_from_origin(root, origin):
    """Line graph of `root` with vertices in the order given by origin.

    Raises when origin is not a relabeling of the root's edge copies.
    """
    from itertools import combinations as _comb

    from .graphs import SimpleGraph

    copies = []
    for a, b, m in root.edges:
        copies.extend([(a, b)] * m)
    wanted = sorted(tuple(sorted(e)) for e in origin)
    if sorted(copies) != wanted:
        raise ValueError("origin does not match the root's edge copies")
    edges = [
        (i, j)
        for i, j in _comb(range(len(origin)), 2)
        if set(origin[i]) & set(origin[j])
    ]
    return SimpleGraph.from_edges(len(origin), edges)


# ---------------------------------------------------------------------------
# certificates

class KPCertificate:
    """A kernel-perfect orientation with out-degrees below a budget.

    `digraph` may contain bidirected pairs, which model doubled edges
    of a supergraph of `graph`; `supergraph_edges` records the doubled
    pairs.  `root` (optional) is a multigraph whose line graph is the
    underlying graph, enabling the fast kernel-perfection check.
    """

    def __init__(self, graph, f, digraph, supergraph_edges=(), root=None,
                 origin=None, verified_by="exhaustive"):
        self.graph = graph
        self.f = f
        self.digraph = digraph
        self.supergraph_edges = tuple(sorted(tuple(sorted(e)) for e in supergraph_edges))
        self.root = root
        self.origin = tuple(origin) if origin is not None else None
        self.verified_by = verified_by

    def check(self, cap=12):
        """Re-verify all claims: support, out-degree bound, kernel-perfection."""
        if self.digraph.support().edges != self.graph.edges:
            return False
        doubled = {
            tuple(sorted((u, v)))
            for u, v in self.digraph.arcs
            if self.digraph.is_bidirected(u, v)
        }
        if doubled != set(self.supergraph_edges):
            return False
        outs = self.digraph.out_degrees()
        if any(outs[v] > self.f(v) - 1 for v in range(self.graph.n)):
            return False
        if self.root is not None:
            return kp_line_characterization(self.digraph, self.root, origin=self.origin)
        ok, _ = is_kernel_perfect(self.digraph, cap=cap)
        return ok

    def to_json(self):
        from .graphs import digraph_to_json

        doc = {
            "n": self.graph.n,
            "edges": self.graph.edge_list(),
            "f": list(self.f.values),
            "orientation": digraph_to_json(self.digraph),
            "doubled": [list(e) for e in self.supergraph_edges],
            "verified_by": self.verified_by,
        }
        if self.root is not None:
            doc["root"] = {"n": self.root.n, "edges": [list(e) for e in self.root.edges]}
        if self.origin is not None:
            doc["origin"] = [list(e) for e in self.origin]
        return doc

    @staticmethod
    def from_json(doc):
        from .graphs import MultiGraph, SimpleGraph, digraph_from_json

        g = SimpleGraph.from_edges(doc["n"], doc["edges"])
        f = ListSizeFn(tuple(doc["f"]))
        d = digraph_from_json(doc["orientation"])
        root = None
        if "root" in doc:
            root = MultiGraph.from_edges(doc["root"]["n"], doc["root"]["edges"])
        origin = None
        if "origin" in doc:
            origin = [tuple(e) for e in doc["origin"]]
        return KPCertificate(
            g, f, d, [tuple(e) for e in doc.get("doubled", [])],
            root=root, origin=origin,
            verified_by=doc.get("verified_by", "exhaustive"),
        )


def is_f_KP(g, f, allow_doubling=False, cap=8):
    """Search for a kernel-perfect (super)orientation within budget f.

    Each edge is tried one way, the other way, and (when doubling is
    allowed) both ways at once, in a fixed deterministic order, pruning
    on the out-degree bound d+(v) <= f(v) - 1.  Returns the first
    certificate found, else None.
    """
    if g.n > cap:
        raise ValueError(f"search capped at {cap} vertices")
    edges = g.edge_list()
    limit = [f(v) - 1 for v in range(g.n)]
    if any(x < 0 for x in limit):
        return None
    outs = [0] * g.n
    chosen = []

    def place(k):
        if k == len(edges):
            d = Digraph.from_arcs(g.n, [a for arcs in chosen for a in arcs])
            ok, _ = is_kernel_perfect(d)
            return ok
        u, v = edges[k]
        options = [((u, v),), ((v, u),)]
        if allow_doubling:
            options.append(((u, v), (v, u)))
        for arcs in options:
            feasible = True
            for a, _ in arcs:
                outs[a] += 1
                if outs[a] > limit[a]:
                    feasible = False
            if feasible:
                chosen.append(arcs)
                if place(k + 1):
                    return True
                chosen.pop()
            for a, _ in arcs:
                outs[a] -= 1
        return False

    if not place(0):
        return None
    arcs = [a for group in chosen for a in group]
    d = Digraph.from_arcs(g.n, arcs)
    doubled = [e for e in edges if (e[0], e[1]) in d.arcs and (e[1], e[0]) in d.arcs]
    return KPCertificate(g, f, d, doubled, verified_by="exhaustive")


# ---------------------------------------------------------------------------
# constructions for line graphs of bipartite multigraphs

def bipartition(b):
    """Two-color the support of a multigraph; None if an odd cycle exists."""
    color = [None] * b.n
    for start in range(b.n):
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for a, c, _ in b.edges:
                if v not in (a, c):
                    continue
                w = c if v == a else a
                if color[w] is None:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    x = [v for v in range(b.n) if color[v] == 0]
    y = [v for v in range(b.n) if color[v] == 1]
    return x, y


def bipartite_edge_coloring(b, parts):
    """Proper edge coloring of a bipartite multigraph with Delta colors.

    Standard augmenting-path coloring: insert edge copies one at a
    time; when no color is free at both endpoints, swap colors along an
    alternating chain.  Returns a list of colors (1-based), one per
    edge copy in line-graph vertex order.
    """
    copies = []
    for a, c, m in b.edges:
        copies.extend((a, c) for _ in range(m))
    delta = max(b.degrees()) if b.edges else 0
    used = [dict() for _ in range(b.n)]  # vertex -> color -> copy index
    colors = [None] * len(copies)

    def assign(idx, col):
        u, v = copies[idx]
        colors[idx] = col
        used[u][col] = idx
        used[v][col] = idx

    def unassign(idx):
        u, v = copies[idx]
        col = colors[idx]
        del used[u][col]
        del used[v][col]
        colors[idx] = None

    for idx, (u, v) in enumerate(copies):
        free_u = next(c for c in range(1, delta + 1) if c not in used[u])
        free_v = next(c for c in range(1, delta + 1) if c not in used[v])
        if free_u == free_v:
            assign(idx, free_u)
            continue
        # swap colors free_u/free_v along the alternating chain from v;
        # in a bipartite graph the chain cannot reach u, so free_u
        # becomes free at v as well
        a, bcol = free_u, free_v
        chain = []
        w, col = v, a
        while col in used[w]:
            j = used[w][col]
            chain.append(j)
            p, q = copies[j]
            w = q if w == p else p
            col = bcol if col == a else a
        swapped = [bcol if colors[j] == a else a for j in chain]
        for j in chain:
            unassign(j)
        for j, new in zip(chain, swapped):
            assign(j, new)
        assign(idx, a)
    return copies, colors


def _order_orientation(b, copies, order_pos):
    """Orient the line graph from per-root-vertex priority positions.

    order_pos[v] maps edge-copy index -> position in v's linear order;
    arcs run from later positions toward earlier ones, so the common
    sink of each clique order absorbs its clique.
    """
    arcs = set()
    n = len(copies)
    for i in range(n):
        for j in range(i + 1, n):
            shared = set(copies[i]) & set(copies[j])
            for v in shared:
                pi, pj = order_pos[v][i], order_pos[v][j]
                if pi < pj:
                    arcs.add((j, i))
                else:
                    arcs.add((i, j))
    return Digraph.from_arcs(n, arcs)


def galvin_orientation(b, parts=None):
    """Kernel-perfect orientation of the line graph of bipartite b.

    The certificate budget is f(e) = max of the endpoint degrees of the
    root edge e, and every out-degree stays strictly below it.  The
    primary construction colors the edges properly with Delta colors
    and orders each star by color, ascending on one side and descending
    on the other; if that misses the per-edge bound (possible on
    irregular inputs), a backtracking search over per-vertex star
    orders takes over.
    """
    if parts is None:
        parts = bipartition(b)
        if parts is None:
            raise ValueError("input multigraph is not bipartite")
    else:
        xset, yset = set(parts[0]), set(parts[1])
        for u, v, _ in b.edges:
            if not ((u in xset and v in yset) or (u in yset and v in xset)):
                raise ValueError("edge not across the given parts")
    lg, origin = line_graph(b)
    degs = b.degrees()
    f = ListSizeFn(tuple(max(degs[u], degs[v]) for u, v in origin))
    xset = set(parts[0])

    copies, colors = bipartite_edge_coloring(b, parts)
    assert tuple(copies) == tuple(origin)
    # positions: at an X-vertex later colors come later; at a Y-vertex
    # later colors come earlier.  Parallel copies tie-break by index so
    # no bidirected pairs arise.
    order_pos = {}
    for v in range(b.n):
        incident = [i for i, e in enumerate(origin) if v in e]
        if v in xset:
            incident.sort(key=lambda i: (colors[i], i))
        else:
            incident.sort(key=lambda i: (-colors[i], i))
        order_pos[v] = {i: p for p, i in enumerate(incident)}
    d = _order_orientation(b, origin, order_pos)
    outs = d.out_degrees()
    if all(outs[i] <= f(i) - 1 for i in range(lg.n)):
        cert = KPCertificate(lg, f, d, _doubled_pairs(d), root=b,
                             verified_by="characterization")
        if cert.check():
            return cert

    d = _search_star_orders(b, origin, f)
    if d is None:
        raise RuntimeError("no orientation met the degree bound")
    cert = KPCertificate(lg, f, d, _doubled_pairs(d), root=b,
                         verified_by="characterization")
    assert cert.check()
    return cert


def _doubled_pairs(d):
    return [(u, v) for u, v in d.arcs if u < v and (v, u) in d.arcs]


def _search_star_orders(b, origin, f):
    """Backtracking over per-vertex star orders meeting the budget.

    With positions p_v(e) counted from the absorbing end, the out-degree
    of a copy e = uv is p_u(e) + p_v(e), so the bound becomes a rank-sum
    constraint per edge copy.
    """
    n = len(origin)
    incident = {v: [i for i, e in enumerate(origin) if v in e] for v in range(b.n)}
    order_pos = {}
    verts = sorted(range(b.n), key=lambda v: -len(incident[v]))

    def feasible(v, pos):
        for i, p in pos.items():
            u, w = origin[i]
            other = w if v == u else u
            if other in order_pos:
                if p + order_pos[other][i] > f(i) - 1:
                    return False
            else:
                if p > f(i) - 1:
                    return False
        return True

    def place(k):
        if k == len(verts):
            return True
        v = verts[k]
        from itertools import permutations

        for perm in permutations(incident[v]):
            pos = {i: p for p, i in enumerate(perm)}
            if not feasible(v, pos):
                continue
            order_pos[v] = pos
            if place(k + 1):
                return True
            del order_pos[v]
        return False

    if not place(0):
        return None
    return _order_orientation(b, origin, order_pos)


# ---------------------------------------------------------------------------
# clique-order constructions

def orientation_from_clique_orders(n, clique_orders):
    """Union of transitive tournaments, one per clique order.

    Each order orients its clique from earlier entries toward later
    ones; conflicting orders on a shared pair yield a bidirected pair.
    """
    arcs = set()
    for order in clique_orders:
        for ai, a in enumerate(order):
            for bi in range(ai + 1, len(order)):
                arcs.add((a, order[bi]))
    return Digraph.from_arcs(n, arcs)


def mu3_kp_certificates():
    """Certificates for the built-in clique-order catalog entries.

    For each entry: build the line graph, orient it from the stored
    clique orders, check the expected degree and out-degree rows, check
    kernel-perfection via the characterization, and check the budget
    f(v) = d(v) on emphasized vertices and d(v) - 1 otherwise.  Any
    mismatch raises.
    """
    from .catalog import clique_order_catalog

    certs = []
    for entry in clique_order_catalog():
        lg = _line_graph_from_origin(entry.root, entry.edge_origin)
        d = orientation_from_clique_orders(lg.n, entry.clique_orders)
        degs = tuple(lg.degrees())
        if degs != entry.expected_degrees:
            raise AssertionError(f"{entry.name}: degree row {degs} != {entry.expected_degrees}")
        outs = tuple(d.out_degrees())
        if entry.expected_outdegrees is not None and outs != entry.expected_outdegrees:
            raise AssertionError(f"{entry.name}: out-degree row {outs} != {entry.expected_outdegrees}")
        if not kp_line_characterization(d, entry.root, origin=entry.edge_origin):
            raise AssertionError(f"{entry.name}: orientation is not kernel-perfect")
        f = ListSizeFn(tuple(
            degs[v] if v in entry.emphasized else degs[v] - 1 for v in range(lg.n)
        ))
        if any(outs[v] > f(v) - 1 for v in range(lg.n)):
            raise AssertionError(f"{entry.name}: out-degree exceeds budget")
        doubled = [
            tuple(sorted((u, v))) for u, v in d.arcs if u < v and d.is_bidirected(u, v)
        ]
        certs.append(KPCertificate(lg, f, d, doubled, root=entry.root,
                                   origin=entry.edge_origin,
                                   verified_by="characterization"))
    return certs
