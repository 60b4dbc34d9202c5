"""Graphs of groups with free abelian vertex groups and infinite cyclic edge groups.

Edge ``e`` from ``tail`` to ``head`` identifies ``attach_tail`` in the tail group
with ``attach_head`` in the head group: crossing ``e`` forwards satisfies
``e^-1 * attach_tail * e = attach_head``. Elements of the fundamental group are
loops at vertex 0, stored as alternating vertex vectors and crossings
``(edge, +1 | -1)``. Crossing a spanning-tree edge is invisible in words; a
non-tree edge crossing is its stable letter.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .intlattice import (
    DegenerateEdgeError,
    Vector,
    coset_decompose,
    cyclic_intersection,
    cyclic_membership,
    is_primitive,
    primitive_part,
)
from .quotients import FinitePresentation
from .words import GenAlphabet, Letter, Word, check_word

Crossing = tuple[int, int]


class ConstructionUnavailable(ValueError):
    """A construction has no valid input data for this graph of groups."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GogVertex:
    name: str
    rank: int
    generators: tuple[str, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"vertex {self.name!r}: rank must be positive")
        gens = tuple(self.generators) or tuple(f"{self.name}_{i}" for i in range(self.rank))
        if len(gens) != self.rank:
            raise ValueError(f"vertex {self.name!r}: {len(gens)} generator names for rank {self.rank}")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GogEdge:
    tail: int
    head: int
    attach_tail: Vector
    attach_head: Vector
    tree: bool = False
    letter: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "attach_tail", tuple(int(x) for x in self.attach_tail))
        object.__setattr__(self, "attach_head", tuple(int(x) for x in self.attach_head))
        if not any(self.attach_tail) or not any(self.attach_head):
            raise DegenerateEdgeError("edge groups must be infinite cyclic; zero attaching vector")

    def origin(self, d: int) -> int:
        return self.tail if d > 0 else self.head

    def terminus(self, d: int) -> int:
        return self.head if d > 0 else self.tail

    def attach_origin(self, d: int) -> Vector:
        return self.attach_tail if d > 0 else self.attach_head

    def attach_terminus(self, d: int) -> Vector:
        return self.attach_head if d > 0 else self.attach_tail


def _add(u: Sequence[int], v: Sequence[int], k: int = 1) -> Vector:
    return tuple(a + k * b for a, b in zip(u, v))


def _scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * x for x in v)


@dataclass(frozen=True)
class GogElement:
    """Loop at the base vertex: ``verts[0] c_1 verts[1] ... c_k verts[k]``."""

    verts: tuple[Vector, ...]
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        if len(self.verts) != len(self.crossings) + 1:
            raise ValueError("need exactly one vertex syllable more than crossings")

    @property
    def length(self) -> int:
        return len(self.crossings)

    def is_identity(self) -> bool:
        return not self.crossings and not any(self.verts[0])


@dataclass(frozen=True)
class GraphOfGroups:
    vertices: tuple[GogVertex, ...]
    edges: tuple[GogEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        nv = len(self.vertices)
        if nv == 0:
            raise ValueError("graph of groups needs a vertex")
        for k, e in enumerate(self.edges):
            if not (0 <= e.tail < nv and 0 <= e.head < nv):
                raise ValueError(f"edge {k}: endpoint out of range")
            if len(e.attach_tail) != self.vertices[e.tail].rank:
                raise ValueError(f"edge {k}: attach_tail has wrong dimension")
            if len(e.attach_head) != self.vertices[e.head].rank:
                raise ValueError(f"edge {k}: attach_head has wrong dimension")
        tree = [e for e in self.edges if e.tree]
        if len(tree) != nv - 1:
            raise ValueError("spanning tree must have exactly |V|-1 edges")
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in tree:
            a, b = find(e.tail), find(e.head)
            if a == b:
                raise ValueError("tree edges contain a cycle")
            parent[a] = b
        # names are checked by building the alphabet
        _ = self.alphabet

    # ---- construction -------------------------------------------------
    @classmethod
    def from_json(cls, data) -> "GraphOfGroups":
        if isinstance(data, str):
            data = json.loads(data)
        verts = [GogVertex(v["name"], int(v["rank"]), tuple(v.get("generators", ()))) for v in data["vertices"]]
        index = {v.name: i for i, v in enumerate(verts)}

        def vid(x):
            return index[x] if isinstance(x, str) else int(x)

        edges = [GogEdge(vid(e["tail"]), vid(e["head"]), tuple(e["attach_tail"]), tuple(e["attach_head"]),
                         bool(e.get("tree", False)), e.get("letter")) for e in data.get("edges", [])]
        return cls(tuple(verts), tuple(edges))

    def to_json(self) -> dict:
        return {
            "vertices": [{"name": v.name, "rank": v.rank, "generators": list(v.generators)} for v in self.vertices],
            "edges": [{"tail": self.vertices[e.tail].name, "head": self.vertices[e.head].name,
                       "attach_tail": list(e.attach_tail), "attach_head": list(e.attach_head),
                       "tree": e.tree, **({"letter": self.stable_letter_names[k]} if not e.tree else {})}
                      for k, e in enumerate(self.edges)],
        }

    # ---- derived data -------------------------------------------------
    @cached_property
    def stable_edges(self) -> tuple[int, ...]:
        return tuple(k for k, e in enumerate(self.edges) if not e.tree)

    @cached_property
    def stable_letter_names(self) -> dict[int, str]:
        out = {}
        for j, k in enumerate(self.stable_edges):
            e = self.edges[k]
            out[k] = e.letter or ("t" if len(self.stable_edges) == 1 else f"t{j + 1}")
        return out

    @cached_property
    def alphabet(self) -> GenAlphabet:
        names = [g for v in self.vertices for g in v.generators]
        names += [self.stable_letter_names[k] for k in self.stable_edges]
        return GenAlphabet(tuple(names))

    @cached_property
    def _symbols(self) -> list[tuple]:
        """Alphabet index -> ("v", vertex, coordinate) or ("t", edge)."""
        out = []
        for i, v in enumerate(self.vertices):
            out += [("v", i, j) for j in range(v.rank)]
        out += [("t", k) for k in self.stable_edges]
        return out

    @cached_property
    def _vertex_offset(self) -> list[int]:
        offs, acc = [], 0
        for v in self.vertices:
            offs.append(acc)
            acc += v.rank
        return offs

    @cached_property
    def tree_paths(self) -> list[tuple[Crossing, ...]]:
        """Crossings from the base vertex to each vertex along the spanning tree."""
        paths: list[tuple[Crossing, ...] | None] = [None] * len(self.vertices)
        paths[0] = ()
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for k, e in enumerate(self.edges):
                if not e.tree:
                    continue
                for d in (1, -1):
                    if e.origin(d) == u and paths[e.terminus(d)] is None:
                        paths[e.terminus(d)] = paths[u] + ((k, d),)
                        queue.append(e.terminus(d))
        return paths  # type: ignore[return-value]

    def zero(self, v: int) -> Vector:
        return (0,) * self.vertices[v].rank

    def vertex_index(self, name: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.name == name:
                return i
        raise KeyError(name)

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format(w)

    def incident_subgroups(self, v: int) -> list[Vector]:
        out = []
        for e in self.edges:
            if e.tail == v:
                out.append(e.attach_tail)
            if e.head == v:
                out.append(e.attach_head)
        return out


# ---- paths --------------------------------------------------------------

def _path_vertices(G: GraphOfGroups, start: int, crossings: Sequence[Crossing]) -> list[int]:
    out = [start]
    for k, d in crossings:
        e = G.edges[k]
        if e.origin(d) != out[-1]:
            raise ValueError("crossing does not start where the previous syllable ends")
        out.append(e.terminus(d))
    return out


def _concat(a: tuple[list[Vector], list[Crossing]], b: tuple[list[Vector], list[Crossing]]):
    av, ac = a
    bv, bc = b
    return av[:-1] + [_add(av[-1], bv[0])] + bv[1:], ac + bc


def _tree_path(G: GraphOfGroups, v: int, vec: Vector | None = None):
    """Raw path base -> v, optional vector at v, and back."""
    cs = list(G.tree_paths[v])
    there = _path_vertices(G, 0, cs)
    verts = [G.zero(x) for x in there]
    if vec is not None:
        verts[-1] = vec
    back = [(k, -d) for k, d in reversed(cs)]
    return verts + [G.zero(x) for x in reversed(there[:-1])], cs + back


def _inverse_path(verts: Sequence[Vector], crossings: Sequence[Crossing]):
    return [tuple(-x for x in v) for v in reversed(verts)], [(k, -d) for k, d in reversed(crossings)]


def _reduce(G: GraphOfGroups, verts: Sequence[Vector], crossings: Sequence[Crossing]):
    """Remove pinches with a stack; independent of the start vertex."""
    out_v = [tuple(verts[0])]
    out_c: list[Crossing] = []
    for c, v in zip(crossings, verts[1:]):
        if out_c and out_c[-1] == (c[0], -c[1]):
            k_edge, d = out_c[-1]
            e = G.edges[k_edge]
            k = cyclic_membership(e.attach_terminus(d), out_v[-1])
            if k is not None:
                out_c.pop()
                out_v.pop()
                out_v[-1] = _add(_add(out_v[-1], e.attach_origin(d), k), v)
                continue
        out_c.append(c)
        out_v.append(tuple(v))
    return out_v, out_c


def _canonicalize(G: GraphOfGroups, verts: list[Vector], crossings: list[Crossing]) -> None:
    """Push coset representatives left to right (in place)."""
    for i, (k_edge, d) in enumerate(crossings):
        e = G.edges[k_edge]
        rep, k = coset_decompose(e.attach_origin(d), verts[i])
        verts[i] = rep
        verts[i + 1] = _add(verts[i + 1], e.attach_terminus(d), k)


def _normalize(G: GraphOfGroups, verts, crossings) -> GogElement:
    v, c = _reduce(G, verts, crossings)
    _canonicalize(G, v, c)
    return GogElement(tuple(v), tuple(c))


# ---- public element API -------------------------------------------------

def vertex_element(G: GraphOfGroups, v: int, vec: Sequence[int]) -> GogElement:
    vec = tuple(int(x) for x in vec)
    if len(vec) != G.vertices[v].rank:
        raise ValueError("vector dimension does not match vertex rank")
    return _normalize(G, *_tree_path(G, v, vec))


def _letter_path(G: GraphOfGroups, letter: Letter):
    i, s = letter
    sym = G._symbols[i]
    if sym[0] == "v":
        _, v, j = sym
        vec = [0] * G.vertices[v].rank
        vec[j] = s
        return _tree_path(G, v, tuple(vec))
    k = sym[1]
    e = G.edges[k]
    to_tail = list(G.tree_paths[e.tail])
    to_head = list(G.tree_paths[e.head])
    if s < 0:
        to_tail, to_head = to_head, to_tail
    cs = to_tail + [(k, s)] + [(q, -d) for q, d in reversed(to_head)]
    return [G.zero(x) for x in _path_vertices(G, 0, cs)], cs


def element_from_word(G: GraphOfGroups, w: Sequence[Letter]) -> GogElement:
    check_word(w, len(G.alphabet))
    path = ([G.zero(0)], [])
    for x in w:
        path = _concat(path, _letter_path(G, x))
    return _normalize(G, *path)


def parse_element(G: GraphOfGroups, text: str) -> GogElement:
    return element_from_word(G, G.parse(text))


def element_to_word(G: GraphOfGroups, g: GogElement) -> Word:
    out: list[Letter] = []
    here = _path_vertices(G, 0, g.crossings)
    for idx, vec in enumerate(g.verts):
        v = here[idx]
        off = G._vertex_offset[v]
        for j, x in enumerate(vec):
            out += [(off + j, 1 if x > 0 else -1)] * abs(x)
        if idx < len(g.crossings):
            k, d = g.crossings[idx]
            if not G.edges[k].tree:
                out.append((G.alphabet.index(G.stable_letter_names[k]), d))
    return tuple(out)


def format_element(G: GraphOfGroups, g: GogElement) -> str:
    return G.format(element_to_word(G, g))


def multiply(G: GraphOfGroups, *gs: GogElement) -> GogElement:
    path = ([G.zero(0)], [])
    for g in gs:
        path = _concat(path, (list(g.verts), list(g.crossings)))
    return _normalize(G, *path)


def inverse(G: GraphOfGroups, g: GogElement) -> GogElement:
    return _normalize(G, *_inverse_path(g.verts, g.crossings))


def power(G: GraphOfGroups, g: GogElement, k: int) -> GogElement:
    base = g if k >= 0 else inverse(G, g)
    return multiply(G, *([base] * abs(k)))


def britton_reduce(G: GraphOfGroups, g: GogElement) -> GogElement:
    """Britton-reduced form with canonical coset representatives."""
    here = _path_vertices(G, 0, g.crossings)
    for v, vec in zip(here, g.verts):
        if len(vec) != G.vertices[v].rank:
            raise ValueError("vertex syllable has the wrong dimension")
    if here[-1] != 0:
        raise ValueError("element must be a loop at the base vertex")
    return _normalize(G, list(g.verts), list(g.crossings))


def word_problem(G: GraphOfGroups, w: Sequence[Letter] | GogElement) -> bool:
    g = w if isinstance(w, GogElement) else element_from_word(G, w)
    return britton_reduce(G, g).is_identity()


def presentation(G: GraphOfGroups) -> FinitePresentation:
    """Vertex commutators, tree-edge identifications, stable-letter relations."""
    A = G.alphabet
    rels: list[Word] = []
    off = G._vertex_offset

    def vec_word(v: int, vec: Sequence[int]) -> Word:
        out = []
        for j, x in enumerate(vec):
            out += [(off[v] + j, 1 if x > 0 else -1)] * abs(x)
        return tuple(out)

    def inv(w):
        return tuple((i, -s) for i, s in reversed(w))

    for v, vert in enumerate(G.vertices):
        for i, j in itertools.combinations(range(vert.rank), 2):
            a, b = off[v] + i, off[v] + j
            rels.append(((a, 1), (b, 1), (a, -1), (b, -1)))
    for k, e in enumerate(G.edges):
        alpha, omega = vec_word(e.tail, e.attach_tail), vec_word(e.head, e.attach_head)
        if e.tree:
            rels.append(alpha + inv(omega))
        else:
            t = A.index(G.stable_letter_names[k])
            rels.append(((t, -1),) + alpha + ((t, 1),) + inv(omega))
    return FinitePresentation(A, tuple(rels))


# ---- tree action ----------------------------------------------------------

ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"


def cyclic_core(G: GraphOfGroups, g: GogElement) -> tuple[list[Vector], list[Crossing]]:
    """Cyclically reduce: remove pinches across the wrap-around point until none remain.

    Returns ``(V, C)`` with ``V[i]`` the vertex vector in front of ``C[i]``; with no
    crossings left, ``V`` holds the single elliptic vertex vector.
    """
    g = britton_reduce(G, g)
    C = list(g.crossings)
    if not C:
        return [g.verts[0]], []
    V = [_add(g.verts[-1], g.verts[0])] + list(g.verts[1:-1])
    changed = True
    while changed and len(C) >= 2:
        changed = False
        n = len(C)
        for i in range(n):
            j = (i - 1) % n
            if C[j] != (C[i][0], -C[i][1]):
                continue
            e = G.edges[C[j][0]]
            k = cyclic_membership(e.attach_terminus(C[j][1]), V[i])
            if k is None:
                continue
            nxt = (i + 1) % n
            merged = _add(_add(V[j], e.attach_origin(C[j][1]), k), V[nxt]) if n > 2 else \
                _add(V[j], e.attach_origin(C[j][1]), k)
            if n == 2:
                return [merged], []
            V[nxt] = merged
            for idx in sorted({i, j}, reverse=True):
                del V[idx]
                del C[idx]
            changed = True
            break
    return V, C


def classify_isometry(G: GraphOfGroups, g: GogElement) -> str:
    _, C = cyclic_core(G, g)
    return HYPERBOLIC if C else ELLIPTIC


def _vector_order(rank: int, norm: int) -> list[Vector]:
    def key(x):
        return 2 * abs(x) - (1 if x > 0 else 0)

    vs = [v for v in itertools.product(range(-norm, norm + 1), repeat=rank) if sum(map(abs, v)) == norm]
    return sorted(vs, key=lambda v: [key(x) for x in v])


def least_vector_outside(subgroups: Sequence[Vector], rank: int, max_norm: int = 64) -> Vector | None:
    """Least nonzero vector (by L1 norm, then 0 < 1 < -1 < 2 < ...) outside every cyclic subgroup."""
    for norm in range(1, max_norm + 1):
        for v in _vector_order(rank, norm):
            if all(cyclic_membership(s, v) is None for s in subgroups):
                return v
    return None


def wpd_candidate(G: GraphOfGroups) -> GogElement:
    """Product over vertices v (and stable letters t_j) of ``a_v * t_j^-1 a_v t_j``."""
    if not G.edges:
        raise ConstructionUnavailable("no edges: the tree is a single vertex")
    choices = []
    for v, vert in enumerate(G.vertices):
        subs = G.incident_subgroups(v)
        if vert.rank == 1 and any(abs(s[0]) == 1 for s in subs):
            raise ConstructionUnavailable(f"vertex {vert.name!r}: an edge group is the whole vertex group")
        a = least_vector_outside(subs, vert.rank)
        if a is None:
            raise ConstructionUnavailable(f"vertex {vert.name!r}: no element outside the edge groups")
        choices.append(vertex_element(G, v, a))
    stable = [element_from_word(G, ((G.alphabet.index(G.stable_letter_names[k]), 1),)) for k in G.stable_edges]
    factors = []
    for a in choices:
        if not stable:
            factors.append(a)
        for t in stable:
            factors += [a, inverse(G, t), a, t]
    return multiply(G, *factors)


# ---- kernel of the action -------------------------------------------------

@dataclass
class KernelResult:
    status: str  # "trivial" | "cyclic" | "unknown"
    generator: GogElement | None = None
    vector: Vector | None = None  # generator as a vector in the base vertex group
    power: int | None = None
    certificate: dict = field(default_factory=dict)
    reason: str = ""


def _fixer_transport(G: GraphOfGroups, c: Vector | None, crossings: Sequence[Crossing]):
    """Push a base-vertex cyclic subgroup <c> along tree crossings, shrinking to edge fixers.

    Returns (base_vector, vector at end, trivial_witness). ``c is None`` means the
    whole base group.
    """
    base, cur = c, c
    for k, d in crossings:
        e = G.edges[k]
        sub = e.attach_origin(d)
        if cur is None:
            base, cur = sub, e.attach_terminus(d)
            continue
        inter = cyclic_intersection(cur, sub)
        if not any(inter):
            return None, None, {"vertex": G.vertices[e.origin(d)].name, "p": list(cur), "q": list(sub)}
        j = cyclic_membership(cur, inter)
        i = cyclic_membership(sub, inter)
        base = _scale(j, base)
        cur = _scale(i, e.attach_terminus(d))
    return base, cur, None


def kernel_of_action(G: GraphOfGroups, max_power: int = 12) -> KernelResult:
    if not G.edges:
        return KernelResult("unknown", reason="no edges: the whole group fixes the tree")
    c: Vector | None = None
    for v in range(1, len(G.vertices)):
        base, _, witness = _fixer_transport(G, c, G.tree_paths[v])
        if witness is not None:
            return KernelResult("trivial", certificate=witness, reason="edge fixers along the tree meet trivially")
        if c is None:
            c = base
        else:
            inter = cyclic_intersection(c, base)
            if not any(inter):
                return KernelResult("trivial", certificate={"vertex": G.vertices[0].name, "p": list(c),
                                                            "q": list(base)},
                                    reason="edge fixers along the tree meet trivially")
            c = inter
    at = lambda v: _fixer_transport(G, c, G.tree_paths[v])[1]  # noqa: E731
    for k in G.stable_edges:
        e = G.edges[k]
        for v, sub in ((e.tail, e.attach_tail), (e.head, e.attach_head)):
            cv = at(v)
            if cv is None:  # single vertex, nothing fixed yet
                c = sub
                continue
            inter = cyclic_intersection(cv, sub)
            if not any(inter):
                return KernelResult("trivial", certificate={"vertex": G.vertices[v].name, "p": list(cv),
                                                            "q": list(sub)},
                                    reason="fixer meets a stable edge group trivially")
            c = _scale(cyclic_membership(cv, inter), c)
    if c is None:
        return KernelResult("unknown", reason="no edge constrains the base group")
    for k in G.stable_edges:
        e = G.edges[k]
        p = cyclic_membership(e.attach_tail, at(e.tail))
        q = cyclic_membership(e.attach_head, at(e.head))
        if abs(p) != abs(q):
            return KernelResult("unknown", vector=c, certificate={"edge": k, "p": p, "q": q},
                                reason="non-unimodular stable letter: |m| != |n|")
    cel = vertex_element(G, 0, c)
    gens = [element_from_word(G, ((i, 1),)) for i in range(len(G.alphabet))]
    for kk in range(1, max_power + 1):
        ck = power(G, cel, kk)
        checks = []
        for i, s in enumerate(gens):
            conj = multiply(G, inverse(G, s), ck, s)
            sign = 1 if conj == ck else (-1 if conj == inverse(G, ck) else 0)
            checks.append((G.alphabet.names[i], sign))
        if all(sg for _, sg in checks):
            return KernelResult("cyclic", generator=ck, vector=_scale(kk, c), power=kk,
                                certificate={"conjugation_signs": checks})
    return KernelResult("unknown", vector=c, reason=f"no normalized power up to {max_power}")


def verify_kernel(G: GraphOfGroups, res: KernelResult) -> bool:
    """Independent re-check of a kernel result through the word problem."""
    if res.status == "cyclic":
        ck = res.generator
        if ck is None or ck.is_identity():
            return False
        for i in range(len(G.alphabet)):
            s = element_from_word(G, ((i, 1),))
            conj = multiply(G, inverse(G, s), ck, s)
            if not (word_problem(G, multiply(G, conj, inverse(G, ck)))
                    or word_problem(G, multiply(G, conj, ck))):
                return False
        return classify_isometry(G, ck) == ELLIPTIC
    if res.status == "trivial":
        cert = res.certificate
        v = G.vertex_index(cert["vertex"])
        p, q = tuple(cert["p"]), tuple(cert["q"])
        if any(cyclic_intersection(p, q)):
            return False
        P, Q = vertex_element(G, v, p), vertex_element(G, v, q)
        return all(not word_problem(G, multiply(G, power(G, P, i), power(G, Q, -j)))
                   for i in range(1, 4) for j in range(-3, 4) if j)
    return False


def in_vertex_group(G: GraphOfGroups, v: int, g: GogElement) -> bool:
    """Does g lie in the vertex group at v (seen from the base along the tree)?"""
    cs = list(G.tree_paths[v])
    to_v = ([G.zero(x) for x in _path_vertices(G, 0, cs)], cs)
    pv, pc = _concat(_concat(_inverse_path(*to_v), (list(g.verts), list(g.crossings))), to_v)
    return not _reduce(G, pv, pc)[1]


@dataclass
class WpdVerdict:
    status: str  # "verified" | "counterexample" | "unknown"
    radius: int
    counterexample: dict | None = None
    checked: int = 0


def check_relative_wpd(G: GraphOfGroups, g: GogElement, radius: int) -> WpdVerdict:
    """Bounded search for h in a vertex group, h outside K, with g h g^-1 or g^-1 h g in that group."""
    g = britton_reduce(G, g)
    if classify_isometry(G, g) != HYPERBOLIC:
        raise PreconditionError("g must act hyperbolically")
    K = kernel_of_action(G)
    if K.status == "unknown":
        return WpdVerdict("unknown", radius)
    gi = inverse(G, g)
    checked = 0
    for v, vert in enumerate(G.vertices):
        for h in itertools.product(range(-radius, radius + 1), repeat=vert.rank):
            if not any(h):
                continue
            he = vertex_element(G, v, h)
            if K.status == "cyclic":
                kv = _fixer_transport(G, K.vector, G.tree_paths[v])[1]
                if cyclic_membership(kv, h) is not None:
                    continue
            checked += 1
            for name, conj in (("g h g^-1", multiply(G, g, he, gi)), ("g^-1 h g", multiply(G, gi, he, g))):
                if in_vertex_group(G, v, conj):
                    return WpdVerdict("counterexample", radius,
                                      {"vertex": vert.name, "h": list(h), "conjugate": name}, checked)
    return WpdVerdict("verified", radius, checked=checked)


# ---- class checks ----------------------------------------------------------

@dataclass(frozen=True)
class LoopReport:
    edge: int
    m: int | None
    n: int | None
    unimodular: bool | None


def unimodular_loop_check(G: GraphOfGroups) -> list[LoopReport]:
    out = []
    for k, e in enumerate(G.edges):
        if e.tail != e.head:
            continue
        a, p = primitive_part(e.attach_tail)
        b, q = primitive_part(e.attach_head)
        if p != q:
            out.append(LoopReport(k, None, None, None))
        else:
            out.append(LoopReport(k, a, b, abs(a) == abs(b)))
    return out


def has_isolated_edge_groups(G: GraphOfGroups) -> bool:
    return all(is_primitive(e.attach_tail) and is_primitive(e.attach_head) for e in G.edges)


# ---- standard examples -------------------------------------------------------

def baumslag_solitar_gog(m: int, n: int) -> GraphOfGroups:
    """BS(m,n) as one rank-1 vertex with a loop: t^-1 x^m t = x^n."""
    return GraphOfGroups((GogVertex("X", 1, ("x",)),), (GogEdge(0, 0, (m,), (n,), False, "t"),))


P4_SPLITTING = GraphOfGroups(
    (GogVertex("ab", 2, ("a", "b")), GogVertex("bc", 2, ("b.bc", "c")), GogVertex("cd", 2, ("c.cd", "d"))),
    (GogEdge(0, 1, (0, 1), (1, 0), True), GogEdge(1, 2, (0, 1), (1, 0), True)),
)

TUBULAR_SWAP = GraphOfGroups(
    (GogVertex("A", 2, ("a", "b")),),
    (GogEdge(0, 0, (1, 0), (0, 1), False, "t"),),
)

Z2_POINT = GraphOfGroups((GogVertex("A", 2, ("a", "b")),), ())


def random_word(G: GraphOfGroups, length: int, rng) -> Word:
    return tuple((rng.randrange(len(G.alphabet)), rng.choice((1, -1))) for _ in range(length))


def random_element(G: GraphOfGroups, length: int, rng) -> GogElement:
    return element_from_word(G, random_word(G, length, rng))


def elements_up_to(G: GraphOfGroups, words: Iterable[Word]) -> dict[GogElement, Word]:
    """First word (in the given order) for each distinct element."""
    out: dict[GogElement, Word] = {}
    for w in words:
        out.setdefault(element_from_word(G, w), w)
    return out
