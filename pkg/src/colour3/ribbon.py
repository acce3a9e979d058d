"""Planar coloured ribbon graphs of the 3-colour model at low orders.

A graph is stored as a combinatorial map: darts (half-edges) grouped
into vertices with a fixed cyclic order, plus the pairing alpha that
glues darts into edges.  Vertex 0 is the white (external) vertex, the
rest are trivalent black (internal) vertices.  Faces are the orbits of
phi = sigma o alpha; faces incident to the white vertex are external
and carry the fixed labels, the remaining faces are internal and are
integrated over [0, inf).

The amplitude of a graph is the product over edges of
1/(1 + z1 + z2), where z1 and z2 are the labels of the two faces the
edge separates, integrated over all internal face labels.  Colour
assignments (three colours, every black vertex sees all three, external
edges share one fixed colour) are counted by brute force; the count is
the multiplicity s of the equivalence class, since equivalent graphs
differ exactly by the internal colouring.

Enumeration glues all perfect matchings of the darts and keeps the
connected planar maps with one boundary component in which no face
meets the white vertex twice; rooted canonical labelling (the white
darts are fixed, black darts are relabelled by traversal order)
removes duplicates.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .polylog import li2
from .quad import make_rule

N_COLOURS = 3


@dataclass(frozen=True)
class RibbonGraph:
    """Combinatorial map with vertex 0 white, others black trivalent."""
    vertices: tuple     # tuple of tuples of dart ids, cyclic order
    alpha: tuple        # alpha[d] = partner dart of d

    @property
    def n_darts(self):
        return len(self.alpha)

    @property
    def order(self):
        """Number of black vertex pairs: amplitude carries lambda^(2*order)."""
        blacks = len(self.vertices) - sum(1 for v in self.white_indices)
        return blacks // 2

    @property
    def white_indices(self):
        # every vertex that is not trivalent-black; by construction the
        # builders put white vertices first
        return [i for i, v in enumerate(self.vertices) if i == 0 or len(v) != 3]

    def sigma(self):
        s = [0] * self.n_darts
        for v in self.vertices:
            for i, d in enumerate(v):
                s[d] = v[(i + 1) % len(v)]
        return s

    def edges(self):
        return [(d, self.alpha[d]) for d in range(self.n_darts)
                if d < self.alpha[d]]

    def faces(self):
        """Orbits of phi = sigma o alpha, as tuples of darts."""
        s = self.sigma()
        seen = [False] * self.n_darts
        out = []
        for d0 in range(self.n_darts):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = s[self.alpha[d]]
            out.append(tuple(orbit))
        return out

    def is_connected(self):
        s = self.sigma()
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (s[d], self.alpha[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.n_darts

    def is_planar(self):
        V = len(self.vertices)
        E = self.n_darts // 2
        F = len(self.faces())
        return V - E + F == 2

    def external_faces(self):
        """Faces at white-vertex corners, in white dart order per vertex.

        Returns a list of face tuples, one per white corner; the face at
        corner i of a white vertex carries that vertex's label p_{i+1}.
        """
        faces = self.faces()
        whereis = {}
        for f in faces:
            for d in f:
                whereis[d] = f
        out = []
        for i in self.white_indices:
            for d in self.vertices[i]:
                out.append(whereis[d])
        return out

    def boundary_ok(self):
        """No face may meet the white vertices more than once."""
        ext = self.external_faces()
        return len(set(ext)) == len(ext)

    def to_dict(self):
        return {
            "vertices": [list(v) for v in self.vertices],
            "alpha": list(self.alpha),
            "faces": [list(f) for f in self.faces()],
        }


def count_colourings(graph):
    """Number of colour assignments of the internal edges.

    External edges (incident to a white vertex) all carry one fixed
    colour; every black vertex must see all three colours.  This count
    is the multiplicity s of the graph's equivalence class.
    """
    white_darts = set()
    for i in graph.white_indices:
        white_darts.update(graph.vertices[i])
    edges = graph.edges()
    dart_edge = {}
    for k, (a, b) in enumerate(edges):
        dart_edge[a] = k
        dart_edge[b] = k
    fixed = {k for k, (a, b) in enumerate(edges)
             if a in white_darts or b in white_darts}
    free = [k for k in range(len(edges)) if k not in fixed]
    blacks = [v for i, v in enumerate(graph.vertices)
              if i not in graph.white_indices]
    count = 0
    for assign in product(range(N_COLOURS), repeat=len(free)):
        colour = {k: 0 for k in fixed}
        colour.update(dict(zip(free, assign)))
        ok = True
        for v in blacks:
            if sorted(colour[dart_edge[d]] for d in v) != [0, 1, 2]:
                ok = False
                break
        if ok:
            count += 1
    return count


def amplitude(graph, externals, rule=None, check=True):
    """Numeric amplitude: product of edge weights, internal faces
    integrated over [0, inf) with the compactified rule.

    externals lists the labels of the external faces in white-corner
    order (see RibbonGraph.external_faces).  The coupling power
    lambda^(2*order) is not included.  With check=True the integration
    is repeated with doubled points and a relative deviation above 1e-6
    raises ArithmeticError.
    """
    if rule is None:
        rule = make_rule(12, 24)
    faces = graph.faces()
    ext = graph.external_faces()
    if len(externals) != len(ext):
        raise ValueError(
            f"graph has {len(ext)} external faces, got {len(externals)} labels")
    label = {}
    for f, p in zip(ext, externals):
        label[f] = float(p)
    internal = [f for f in faces if f not in label]
    L = len(internal)

    def evaluate(q_nodes, q_weights):
        # face value arrays broadcast over one axis per internal face
        shape = [1] * L
        vals = {}
        for f in faces:
            if f in label:
                vals[f] = np.float64(label[f])
            else:
                i = internal.index(f)
                sh = shape.copy()
                sh[i] = q_nodes.size
                vals[f] = q_nodes.reshape(sh)
        whereis = {}
        for f in faces:
            for d in f:
                whereis[d] = f
        integrand = np.float64(1.0)
        for a, b in graph.edges():
            integrand = integrand / (1.0 + vals[whereis[a]] + vals[whereis[b]])
        integrand = np.broadcast_to(
            integrand, tuple(q_nodes.size for _ in range(L))).copy()
        for axis in reversed(range(L)):
            integrand = np.tensordot(integrand, q_weights, axes=([axis], [0]))
        return float(integrand)

    out = evaluate(rule.q_nodes, rule.q_weights)
    if check and L > 0:
        fine = make_rule(rule.panels, 2 * rule.points_per_panel)
        out2 = evaluate(fine.q_nodes, fine.q_weights)
        scale = max(abs(out2), 1e-300)
        if abs(out - out2) / scale > 1e-6:
            raise ArithmeticError(
                f"amplitude integration not converged: {out} vs {out2}")
        out = out2
    return out


@dataclass(frozen=True)
class GraphClass:
    """Equivalence class: a representative graph and multiplicity s."""
    representative: RibbonGraph
    s: int


def _canonical_key(graph):
    """Rooted canonical encoding; white darts fixed, black darts
    relabelled in order of first visit by a deterministic traversal."""
    s = graph.sigma()
    white = []
    for i in graph.white_indices:
        white.extend(graph.vertices[i])
    relabel = {}
    order = []
    for d in white:
        relabel[d] = len(relabel)
        order.append(d)
    k = 0
    while k < len(order):
        d = order[k]
        k += 1
        for e in (graph.alpha[d], s[d]):
            if e not in relabel:
                relabel[e] = len(relabel)
                order.append(e)
    enc = tuple((relabel[graph.alpha[d]], relabel[s[d]]) for d in order)
    return enc


def _matchings(darts):
    if not darts:
        yield []
        return
    first, rest = darts[0], darts[1:]
    for i, other in enumerate(rest):
        for m in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


@lru_cache(maxsize=None)
def enumerate_2pt(n):
    """Equivalence classes of 2-point graphs at order lambda^(2n).

    The white vertex is 2-valent with both external edges of one fixed
    colour; n in {0, 1, 2} (the search is brute force over perfect
    matchings of the darts and is meant for desk scale).
    """
    if n not in (0, 1, 2):
        raise ValueError(f"enumeration supports orders 0..2, got {n}")
    n_black = 2 * n
    vertices = [(0, 1)] + [tuple(range(2 + 3 * i, 5 + 3 * i))
                           for i in range(n_black)]
    darts = list(range(2 + 3 * n_black))
    seen = {}
    for m in _matchings(darts):
        alpha = [0] * len(darts)
        for a, b in m:
            alpha[a] = b
            alpha[b] = a
        g = RibbonGraph(tuple(vertices), tuple(alpha))
        if not g.is_connected():
            continue
        if not g.is_planar():
            continue
        if not g.boundary_ok():
            continue
        key = _canonical_key(g)
        if key in seen:
            continue
        s = count_colourings(g)
        if s > 0:
            seen[key] = GraphClass(g, s)
    return tuple(sorted(seen.values(),
                        key=lambda c: (-c.s, _canonical_key(c.representative))))


def resum(classes, externals, rule=None):
    """Sum of s(Gamma) * amplitude(Gamma) over the classes."""
    return sum(c.s * amplitude(c.representative, externals, rule=rule)
               for c in classes)


# ---------------------------------------------------------------------------
# worked examples: the three introductory graphs

def example_graph(k):
    """The three introductory example graphs (k = 1, 2, 3).

    1: two 1-valent white vertices joined through two black vertices
       (order lambda^2, no internal face);
    2: one 2-valent white vertex and two black vertices (order
       lambda^2, one internal face) -- the order-1 2-point graph;
    3: one 3-valent white vertex and three black vertices (order
       lambda^3, one internal face).
    """
    if k == 1:
        vertices = ((0,), (1,), (2, 3, 4), (5, 6, 7))
        pairs = [(0, 2), (1, 5), (3, 6), (4, 7)]
    elif k == 2:
        vertices = ((0, 1), (2, 3, 4), (5, 6, 7))
        pairs = [(0, 2), (1, 5), (3, 7), (4, 6)]
    elif k == 3:
        vertices = ((0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11))
        pairs = [(0, 3), (1, 6), (2, 9), (4, 11), (5, 7), (8, 10)]
    else:
        raise ValueError(f"example index must be 1, 2 or 3, got {k}")
    n = max(d for v in vertices for d in v) + 1
    alpha = [0] * n
    for a, b in pairs:
        alpha[a] = b
        alpha[b] = a
    return RibbonGraph(vertices, tuple(alpha))


def example_closed(k, labels):
    """Closed forms of the three introductory examples."""
    if k == 1:
        p1, p2 = map(float, labels)
        return 1.0 / ((1.0 + p1 + p2) ** 2 * (1.0 + 2.0 * p1) * (1.0 + 2.0 * p2))
    if k == 2:
        p1, p2 = map(float, labels)
        if p1 == p2:
            return 1.0 / ((1.0 + 2.0 * p1) ** 2 * (1.0 + p1))
        return (np.log1p(p1) - np.log1p(p2)) / (
            (1.0 + p1 + p2) ** 2 * (p1 - p2))
    if k == 3:
        p1, p2, p3 = map(float, labels)
        num = (np.log1p(p1) / ((p1 - p2) * (p3 - p1))
               + np.log1p(p2) / ((p2 - p1) * (p3 - p2))
               + np.log1p(p3) / ((p3 - p1) * (p2 - p3)))
        return num / ((1.0 + p1 + p2) * (1.0 + p2 + p3) * (1.0 + p1 + p3))
    raise ValueError(f"example index must be 1, 2 or 3, got {k}")


# ---------------------------------------------------------------------------
# printed closed forms of the four order-2 classes

def _lg(p):
    return float(np.log1p(p))


def amplitude_closed(k, p1, p2):
    """Closed forms of the four order-2 class amplitudes (k = 1..4).

    Valid off the diagonal; the assembled order coefficient handles the
    removable p1 = p2 singularity instead.
    """
    p1 = float(p1)
    p2 = float(p2)
    s = 1.0 + p1 + p2
    d = p1 - p2
    if d == 0.0:
        raise ZeroDivisionError("closed class amplitudes have removable "
                                "poles at p1 = p2; evaluate off-diagonal")
    pi2_6 = np.pi ** 2 / 6.0
    L1, L2 = _lg(p1), _lg(p2)
    if k == 1:
        return (-L1 ** 2 / (d ** 2 * (1 + 2 * p1))
                - L2 ** 2 / (d ** 2 * (1 + 2 * p2))
                - (pi2_6 - 2 * li2(-p1)) / ((1 + 2 * p1) * d * s)
                + (pi2_6 - 2 * li2(-p2)) / ((1 + 2 * p2) * d * s)
                + 2 * L1 * L2 / (d ** 2 * s)) / s ** 2
    if k == 2:
        return (L1 - L2) ** 2 / (d ** 2 * s ** 3)
    if k == 3:
        return (-li2(-p1) / ((1 + 2 * p1) ** 2 * s)
                - (pi2_6 - L1 ** 2 - li2(-p1)) / ((1 + 2 * p1) * d ** 2)
                - (pi2_6 - L1 ** 2 - li2(-p1)) / ((1 + 2 * p1) ** 2 * d)
                + (pi2_6 - L2 * L1 - li2(-p2)) / (s * d ** 2)
                + L1 / (p1 * (1 + p1) * (1 + 2 * p1) * d)) / s ** 2
    if k == 4:
        return (-li2(-p2) / ((1 + 2 * p2) ** 2 * s)
                - (pi2_6 - L2 ** 2 - li2(-p2)) / ((1 + 2 * p2) * d ** 2)
                + (pi2_6 - L2 ** 2 - li2(-p2)) / ((1 + 2 * p2) ** 2 * d)
                + (pi2_6 - L2 * L1 - li2(-p1)) / (s * d ** 2)
                - L2 / (p2 * (1 + p2) * (1 + 2 * p2) * d)) / s ** 2
    raise ValueError(f"class index must be 1..4, got {k}")
