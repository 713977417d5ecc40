"""Deterministic generators for the explicit lower-bound constructions.

Each generator returns a ``FamilyBundle``: the family members, optionally a
claimed universal graph with one witness embedding per member, and a
metadata record.  Vertex numbering follows construction order, so witnesses
are plain index arrays.  All reported sizes are counted on the built graphs.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .embed import Embedding, verify_embedding
from .errors import InputError
from .graph import INF, Graph, disjoint_union, empty_graph
from .solution import UniversalSolution


@dataclass
class FamilyBundle:
    family: str
    graphs: list[Graph]
    names: list[str]
    claimed_universal: Optional[Graph] = None
    witnesses: Optional[tuple[Embedding, ...]] = None
    k: float | int = INF
    metadata: dict = field(default_factory=dict)
    # Further named hosts with their own witnesses (e.g. a tree alternative).
    extras: dict = field(default_factory=dict)

    def verify(self) -> bool:
        if self.claimed_universal is None or self.witnesses is None:
            return True
        return all(
            verify_embedding(g, self.claimed_universal, e, self.k)
            for g, e in zip(self.graphs, self.witnesses)
        )

    def solution(self) -> Optional[UniversalSolution]:
        if self.claimed_universal is None or self.witnesses is None:
            return None
        return UniversalSolution(
            self.claimed_universal, tuple(self.witnesses), "construction", self.k,
            {"family": self.family},
        )


class _Builder:
    """Append-only edge list with a running vertex counter."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def path_from(self, start: int, length: int) -> list[int]:
        """Append ``length`` new vertices as a path hanging off ``start``."""
        out = []
        prev = start
        for _ in range(length):
            v = self.vertex()
            self.edges.append((prev, v))
            out.append(v)
            prev = v
        return out

    def leaves(self, center: int, count: int) -> list[int]:
        out = []
        for _ in range(count):
            v = self.vertex()
            self.edges.append((center, v))
            out.append(v)
        return out

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _shift(e: Sequence[int], offset: int) -> list[int]:
    return [x + offset for x in e]


# ---------------------------------------------------------------------------
# Three trees built from pairs of subdivided stars.

def subdivided_star(branches: int, length: int) -> Graph:
    """``K_{1,branches}`` with every edge replaced by a path of ``length`` edges."""
    b = _Builder()
    c = b.vertex()
    for _ in range(branches):
        b.path_from(c, length)
    return b.graph()


def type_star(i: int, t: int) -> Graph:
    return subdivided_star(t**i, t ** (3 - i))


def gen_star_triple(t: int, max_vertices: int = 10**6) -> FamilyBundle:
    if t < 3:
        raise InputError("star triple needs t >= 3")
    s = t**3 + 1
    if 3 * s > max_vertices:
        raise InputError(f"t={t} needs {3 * s} vertices, above the limit {max_vertices}")
    stars = {i: type_star(i, t) for i in (1, 2, 3)}
    assert all(g.n == s for g in stars.values())

    host = disjoint_union(disjoint_union(stars[1], stars[2]), stars[3])
    host = Graph(host.n, list(host.edges) + [(0, s), (s, 2 * s), (0, 2 * s)])

    graphs, witnesses = [], []
    for i in (1, 2, 3):
        j = 1 + i % 3
        pair = disjoint_union(stars[i], stars[j])
        graphs.append(Graph(pair.n, list(pair.edges) + [(0, s)]))
        witnesses.append(Embedding(
            tuple(_shift(range(s), (i - 1) * s) + _shift(range(s), (j - 1) * s)), INF
        ))
    meta = {
        "t": t,
        "star_size": s,
        "tree_sizes": [g.n for g in graphs],
        "universal_size": host.n,
    }
    return FamilyBundle("star-triple", graphs, ["T1", "T2", "T3"], host, tuple(witnesses), INF, meta)


# ---------------------------------------------------------------------------
# Double stars that defeat greedy folding.

def _double_star(r: int, length: int) -> Graph:
    b = _Builder()
    path = [b.vertex()] + b.path_from(0, length)
    b.leaves(path[0], r)
    b.leaves(path[-1], r)
    return b.graph()


def gen_greedy_family(r: int, s: int) -> FamilyBundle:
    """Three double stars with center distances 3s, 4s, 5s and a 3-star host tree."""
    if r < 3 or s < 1:
        raise InputError("greedy family needs r >= 3 and s >= 1")
    graphs = [_double_star(r, (i + 2) * s) for i in (1, 2, 3)]

    # Host: main path p_0..p_{5s}, a branch of length s off p_{2s} ending at a
    # third center, r leaves at each of the three centers.
    b = _Builder()
    main = [b.vertex()] + b.path_from(0, 5 * s)
    branch = b.path_from(main[2 * s], s)
    third = branch[-1]
    leaves_a = b.leaves(main[0], r)
    leaves_b = b.leaves(main[-1], r)
    leaves_c = b.leaves(third, r)
    host = b.graph()

    spine1 = main[: 2 * s + 1] + branch
    spine2 = [third] + list(reversed(branch[:-1])) + main[2 * s:]
    spine3 = main
    witnesses = (
        Embedding(tuple(spine1 + leaves_a + leaves_c), INF),
        Embedding(tuple(spine2 + leaves_c + leaves_b), INF),
        Embedding(tuple(spine3 + leaves_a + leaves_b), INF),
    )
    d = host.dist
    meta = {
        "r": r,
        "s": s,
        "tree_sizes": [g.n for g in graphs],
        "universal_size": host.n,
        "center_distances": sorted(
            int(d[a, c]) for a, c in ((main[0], third), (third, main[-1]), (main[0], main[-1]))
        ),
    }
    return FamilyBundle("greedy", graphs, ["T1", "T2", "T3"], host, witnesses, INF, meta)


# ---------------------------------------------------------------------------
# Two trees whose minimum k-isometric-universal graph is not a tree.

def _k_tree(path_vertices: int, m: int) -> Graph:
    b = _Builder()
    path = [b.vertex()] + b.path_from(0, path_vertices - 1)
    b.leaves(path[0], m)
    b.leaves(path[-1], m)
    return b.graph()


def gen_k_family(n: int, k: int) -> FamilyBundle:
    if n < 8:
        raise InputError("k-family needs n >= 8")
    if not 0 <= k <= n - 7:
        raise InputError(f"k must lie in 0..{n - 7}")
    m = (n - k - 3) // 2
    t0 = _k_tree(k + 3, m)
    t1 = _k_tree(k + 2, m)
    l1 = k + 2  # path vertices of T_1(k)
    left_leaves = list(range(l1, l1 + m))
    right_leaves = list(range(l1 + m, l1 + 2 * m))

    # Tree host: m extra leaves on the first leaf of T_1(k)'s left star.
    anchor = l1
    tree_host = Graph(t1.n + m, list(t1.edges) + [(anchor, t1.n + i) for i in range(m)])
    new_leaves = list(range(t1.n, t1.n + m))
    t0_in_tree = Embedding(tuple([anchor] + list(range(l1)) + new_leaves + right_leaves), INF)

    # Cyclic host: a second path of length k + 2 between the two centers.
    inner = list(range(t1.n, t1.n + k + 1))
    chain = [0] + inner + [l1 - 1]
    cyc_host = Graph(t1.n + k + 1, list(t1.edges) + list(zip(chain, chain[1:])))
    t0_in_cycle = Embedding(tuple(chain + left_leaves + right_leaves), k)

    ident = Embedding(tuple(range(t1.n)), k)
    meta = {
        "n": n,
        "k": k,
        "m": m,
        "sizes": {"T0": t0.n, "T1": t1.n, "T": tree_host.n, "C": cyc_host.n},
    }
    extras = {"T": (tree_host, (Embedding(t0_in_tree.map, k), ident))}
    return FamilyBundle(
        "k-iso", [t0, t1], ["T0", "T1"], cyc_host, (t0_in_cycle, ident), k, meta, extras
    )


# ---------------------------------------------------------------------------
# 3-dimensional matching gadgets.

@dataclass(frozen=True)
class ThreeDMInstance:
    """Triples ``(x, y, z)`` with every coordinate in ``1..n``."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __init__(self, n: int, triples: Sequence[Sequence[int]]):
        if n < 1:
            raise InputError("3DM ground sets must be nonempty")
        trip = [tuple(int(c) for c in tr) for tr in triples]
        if any(len(tr) != 3 for tr in trip):
            raise InputError("every triple needs three coordinates")
        zs = [tr[2] for tr in trip]
        # Z may be given already shifted into n+1..2n.
        if zs and all(n < z <= 2 * n for z in zs):
            trip = [(x, y, z - n) for x, y, z in trip]
        for tr in trip:
            if not all(1 <= c <= n for c in tr):
                raise InputError(f"triple {tr} out of range 1..{n}")
        if len(set(trip)) != len(trip):
            raise InputError("duplicate triples")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "triples", tuple(sorted(trip)))

    def occurrences(self) -> dict[str, Counter]:
        return {
            axis: Counter(tr[i] for tr in self.triples) for i, axis in enumerate("xyz")
        }

    def degree_violations(self) -> list[str]:
        out = []
        for axis, cnt in self.occurrences().items():
            for e in range(1, self.n + 1):
                if cnt[e] not in (2, 3):
                    out.append(f"{axis}={e} appears in {cnt[e]} triples")
        return out

    def is_matching(self, chosen: Sequence[Sequence[int]]) -> bool:
        chosen = [tuple(tr) for tr in chosen]
        if len(chosen) != self.n or not set(chosen) <= set(self.triples):
            return False
        return all(len({tr[i] for tr in chosen}) == self.n for i in range(3))


def parse_3dm(text: str) -> ThreeDMInstance:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty 3DM file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "3dm":
        raise InputError(f"expected header '3dm <n> <count>', got {lines[0]!r}")
    try:
        n, count = int(head[1]), int(head[2])
        triples = [tuple(int(c) for c in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise InputError(f"bad 3DM file: {exc}") from exc
    if len(triples) != count:
        raise InputError(f"header announces {count} triples, found {len(triples)}")
    return ThreeDMInstance(n, triples)


def format_3dm(inst: ThreeDMInstance) -> str:
    out = [f"3dm {inst.n} {len(inst.triples)}"]
    out.extend(f"{x} {y} {z}" for x, y, z in inst.triples)
    return "\n".join(out) + "\n"


def gadget_star(w: int, n: int) -> Graph:
    """Center of degree 3w+3: 3w pendant edges plus three paths of length 2n+2-w."""
    if not 1 <= w <= 2 * n:
        raise InputError(f"star index {w} outside 1..{2 * n}")
    b = _Builder()
    c = b.vertex()
    b.leaves(c, 3 * w)
    for _ in range(3):
        b.path_from(c, 2 * n + 2 - w)
    return b.graph()


def _add_copy(b: _Builder, g: Graph) -> int:
    offset = b.n
    b.n += g.n
    b.edges.extend((u + offset, v + offset) for u, v in g.edges)
    return offset


def element_tree(w: int, n: int) -> Graph:
    """Gadget star ``w`` with a claw whose leaf is merged into the star center.

    The claw center is vertex ``|S(w)|``, its free leaves follow.
    """
    b = _Builder()
    _add_copy(b, gadget_star(w, n))
    claw = b.leaves(0, 1)[0]
    b.leaves(claw, 2)
    return b.graph()


@dataclass
class _XTree:
    graph: Graph
    star_offset: dict  # relabeled element -> offset of its star copy
    midpoint: dict  # (y, z) relabeled pair -> vertex between the two centers


def _x_tree(inst: ThreeDMInstance, x: int) -> _XTree:
    n = inst.n
    own = [(y, n + z) for (xx, y, z) in inst.triples if xx == x]
    if not own:
        raise InputError(f"element x={x} appears in no triple")
    order: list[int] = []
    for i, (y, z) in enumerate(own):
        order.extend((y, z) if i % 2 == 0 else (z, y))
    pair_of = {}
    for y, z in own:
        pair_of[y] = pair_of[z] = (y, z)

    b = _Builder()
    star_offset: dict[int, int] = {}
    midpoint: dict[tuple[int, int], int] = {}
    prev_center = None
    for pos, w in enumerate(order):
        offset = _add_copy(b, gadget_star(w, n))
        if prev_center is not None:
            within_pair = pos % 2 == 1
            length = 2 if within_pair else 3
            inner = b.path_from(prev_center, length - 1)
            b.edges.append((inner[-1], offset))
            if within_pair:
                midpoint[pair_of[w]] = inner[0]
        star_offset[w] = offset
        prev_center = offset
    return _XTree(b.graph(), star_offset, midpoint)


def _union(parts: Sequence[Graph]) -> tuple[Graph, list[int]]:
    g = empty_graph(0)
    offsets = []
    for p in parts:
        offsets.append(g.n)
        g = disjoint_union(g, p)
    return g, offsets


def gen_np_reduction(inst: ThreeDMInstance) -> FamilyBundle:
    """Forests F^X, F^Y, F^Z encoding a 3DM instance (no claimed host)."""
    for msg in inst.degree_violations():
        warnings.warn(f"3DM restriction violated: {msg}", stacklevel=2)
    n = inst.n
    x_trees = [_x_tree(inst, x) for x in range(1, n + 1)]
    y_trees = [element_tree(y, n) for y in range(1, n + 1)]
    z_trees = [element_tree(n + z, n) for z in range(1, n + 1)]
    fx, _ = _union([xt.graph for xt in x_trees])
    fy, _ = _union(y_trees)
    fz, _ = _union(z_trees)
    meta = {
        "n": n,
        "triples": [list(tr) for tr in inst.triples],
        "star_sizes": [gadget_star(w, n).n for w in range(1, 2 * n + 1)],
        "component_sizes": {
            "FX": [xt.graph.n for xt in x_trees],
            "FY": [g.n for g in y_trees],
            "FZ": [g.n for g in z_trees],
        },
        "component_counts": {"FX": n, "FY": n, "FZ": n},
        "sizes": {"FX": fx.n, "FY": fy.n, "FZ": fz.n},
    }
    return FamilyBundle("np-reduction", [fx, fy, fz], ["FX", "FY", "FZ"], metadata=meta)


def gen_np_certificate(inst: ThreeDMInstance, matching: Sequence[Sequence[int]]) -> FamilyBundle:
    """Reduction forests plus the host built from a 3D matching.

    Each matched ``(x, y, z)`` contributes ``F(x)`` with one pendant vertex
    on the midpoint between the centers of the ``y`` and ``z`` stars; that
    pendant, the midpoint and the two centers form the shared claw.
    """
    n = inst.n
    chosen = [tuple(int(c) for c in tr) for tr in matching]
    if chosen and all(n < tr[2] <= 2 * n for tr in chosen):
        chosen = [(x, y, z - n) for x, y, z in chosen]
    if not inst.is_matching(chosen):
        raise InputError("the given triples are not a 3D matching of the instance")
    bundle = gen_np_reduction(inst)
    x_trees = [_x_tree(inst, x) for x in range(1, n + 1)]
    star_n = gadget_star(1, n).n
    elem_n = star_n + 3

    b = _Builder()
    x_map: list[int] = []
    y_map = [0] * (n * elem_n)
    z_map = [0] * (n * elem_n)
    for x in range(1, n + 1):
        (_, y, z), = [tr for tr in chosen if tr[0] == x]
        xt = x_trees[x - 1]
        off = _add_copy(b, xt.graph)
        x_map.extend(range(off, off + xt.graph.n))
        mid = off + xt.midpoint[(y, n + z)]
        extra = b.leaves(mid, 1)[0]
        cy = off + xt.star_offset[y]
        cz = off + xt.star_offset[n + z]
        for elem, own_c, other_c, target in ((y, cy, cz, y_map), (z, cz, cy, z_map)):
            base = (elem - 1) * elem_n
            for i in range(star_n):
                target[base + i] = own_c + i
            target[base + star_n] = mid
            target[base + star_n + 1] = other_c
            target[base + star_n + 2] = extra
    host = b.graph()
    bundle.family = "np-certificate"
    bundle.claimed_universal = host
    bundle.witnesses = (
        Embedding(tuple(x_map), INF),
        Embedding(tuple(y_map), INF),
        Embedding(tuple(z_map), INF),
    )
    bundle.metadata["matching"] = [list(tr) for tr in sorted(chosen)]
    bundle.metadata["universal_size"] = host.n
    return bundle
