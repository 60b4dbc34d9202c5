"""Right-angled Artin groups given by a finite simplicial graph.

Normal forms are shortlex-least geodesics: a word is first reduced by cancelling
``x ... x^-1`` pairs whose interior commutes with ``x`` (this yields a geodesic),
then the letters are emitted greedily, always taking the least letter that can
be shuffled to the front. All geodesics of an element are related by commuting
swaps, so the result is canonical.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .words import (
    EMPTY,
    GenAlphabet,
    Letter,
    Word,
    check_word,
    exponent_sums,
    inverse,
    letter_key,
    letters,
    shortlex_key,
)


class BallOverflowError(RuntimeError):
    pass


@dataclass(frozen=True)
class SimplicialGraph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = tuple(e) if len(e) == 2 else (None, None)
            if i is None or i == j:
                raise ValueError(f"loops are not allowed: {e!r}")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise ValueError(f"edge {e!r} out of range")
            clean.add(frozenset((i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.vertex_count))
        G.add_edges_from(tuple(e) for e in self.edges)
        return G


@dataclass(frozen=True)
class RaagPresentation:
    graph: SimplicialGraph
    alphabet: GenAlphabet

    def __post_init__(self):
        if len(self.alphabet) != self.graph.vertex_count:
            raise ValueError("one symbol per vertex required")

    @classmethod
    def from_edges(cls, names: Sequence[str], edges: Iterable[tuple[str, str]]) -> "RaagPresentation":
        alphabet = GenAlphabet(tuple(names))
        es = frozenset(frozenset((alphabet.index(u), alphabet.index(v))) for u, v in edges)
        return cls(SimplicialGraph(len(alphabet), es), alphabet)

    @classmethod
    def from_json(cls, data) -> "RaagPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(data["vertices"], [tuple(e) for e in data.get("edges", [])])

    def to_json(self) -> dict:
        names = self.alphabet.names
        es = sorted(tuple(sorted(e)) for e in self.graph.edges)
        return {"vertices": list(names), "edges": [[names[i], names[j]] for i, j in es]}

    @cached_property
    def commutes(self) -> tuple[tuple[bool, ...], ...]:
        n = self.graph.vertex_count
        return tuple(tuple(frozenset((i, j)) in self.graph.edges for j in range(n)) for i in range(n))

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format(w)

    def relators(self) -> list[Word]:
        out = []
        for e in sorted(tuple(sorted(e)) for e in self.graph.edges):
            i, j = e
            out.append(((i, 1), (j, 1), (i, -1), (j, -1)))
        return out


@dataclass(frozen=True)
class HomToZn:
    target_rank: int
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(v) for v in self.images))
        if any(len(v) != self.target_rank for v in self.images):
            raise ValueError("image dimension must equal target rank")


def _reduce(P: RaagPresentation, w: Sequence[Letter]) -> list[Letter]:
    comm = P.commutes
    out: list[Letter] = []
    for i, s in w:
        j = len(out) - 1
        while j >= 0:
            k, t = out[j]
            if k == i:
                break
            if not comm[i][k]:
                j = -1
                break
            j -= 1
        if j >= 0 and out[j] == (i, -s):
            del out[j]
        else:
            out.append((i, s))
    return out


def _lex_least(P: RaagPresentation, w: list[Letter]) -> Word:
    comm = P.commutes
    rest = list(w)
    out: list[Letter] = []
    while rest:
        best = None
        seen: list[int] = []
        for p, (i, s) in enumerate(rest):
            if all(k != i and comm[i][k] for k in seen):
                if best is None or letter_key(rest[p]) < letter_key(rest[best]):
                    best = p
            seen.append(i)
        out.append(rest.pop(best))
    return tuple(out)


def raag_normal_form(P: RaagPresentation, w: Sequence[Letter]) -> Word:
    check_word(w, P.rank)
    return _lex_least(P, _reduce(P, w))


def word_problem(P: RaagPresentation, w: Sequence[Letter]) -> bool:
    check_word(w, P.rank)
    return not _reduce(P, w)


def _front_letters(P: RaagPresentation, w: Word) -> list[int]:
    """Positions of letters that can be shuffled to the front of w."""
    comm = P.commutes
    out, seen = [], []
    for p, (i, _) in enumerate(w):
        if all(k != i and comm[i][k] for k in seen):
            out.append(p)
        seen.append(i)
    return out


def _back_letters(P: RaagPresentation, w: Word) -> list[int]:
    n = len(w)
    return [n - 1 - p for p in _front_letters(P, tuple(reversed(w)))]


def raag_cyclic_reduce(P: RaagPresentation, w: Sequence[Letter]) -> tuple[Word, Word]:
    """Return (core, g) with w = g core g^-1 and core cyclically reduced."""
    core = raag_normal_form(P, w)
    conj: list[Letter] = []
    while True:
        front = _front_letters(P, core)
        back = set(_back_letters(P, core))
        hit = None
        for p in front:
            for q in back:
                if q != p and core[q] == (core[p][0], -core[p][1]):
                    hit = (p, q)
                    break
            if hit:
                break
        if hit is None:
            return core, raag_normal_form(P, conj)
        p, q = hit
        conj.append(core[p])
        core = raag_normal_form(P, [x for j, x in enumerate(core) if j not in hit])


def _rotation_orbit(P: RaagPresentation, core: Word) -> frozenset[Word]:
    orbit = {core}
    queue = deque([core])
    while queue:
        w = queue.popleft()
        moves = [tuple(x for j, x in enumerate(w) if j != p) + (w[p],) for p in _front_letters(P, w)]
        moves += [(w[q],) + tuple(x for j, x in enumerate(w) if j != q) for q in _back_letters(P, w)]
        for m in moves:
            m = raag_normal_form(P, m)
            if m not in orbit:
                orbit.add(m)
                queue.append(m)
    return frozenset(orbit)


_ORBITS: dict = {}


def conjugacy_class_key(P: RaagPresentation, w: Sequence[Letter]) -> Word:
    """Shortlex-least cyclically reduced conjugate of w."""
    core, _ = raag_cyclic_reduce(P, w)
    key = (P, core)
    if key not in _ORBITS:
        if len(_ORBITS) > 200_000:
            _ORBITS.clear()
        orbit = _rotation_orbit(P, core)
        least = min(orbit, key=shortlex_key)
        for x in orbit:
            _ORBITS[(P, x)] = least
    return _ORBITS[key]


def conjugacy_problem(P: RaagPresentation, u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    if exponent_sums(u, P.rank) != exponent_sums(v, P.rank):
        return False
    return conjugacy_class_key(P, u) == conjugacy_class_key(P, v)


@dataclass
class ConjugacyVerdict:
    status: str  # "yes" | "no" | "unknown"
    witness: Word | None = None
    obstruction: dict | None = None
    searched: int = 0


def multiple_conjugacy(P: RaagPresentation, pairs: Sequence[tuple[Word, Word]], radius: int,
                       max_elements: int = 10**6) -> ConjugacyVerdict:
    """Search g in the ball of the given radius with g u_i g^-1 = v_i for all i."""
    if not pairs:
        raise ValueError("need at least one pair")
    for idx, (u, v) in enumerate(pairs):
        if exponent_sums(u, P.rank) != exponent_sums(v, P.rank):
            return ConjugacyVerdict("no", obstruction={
                "pair": idx, "reason": "abelianization",
                "u": exponent_sums(u, P.rank), "v": exponent_sums(v, P.rank)})
        if not conjugacy_problem(P, u, v):
            return ConjugacyVerdict("no", obstruction={"pair": idx, "reason": "not conjugate"})
    count = 0
    for g in iter_ball(P, radius):
        if count >= max_elements:
            break
        count += 1
        gi = inverse(g)
        if all(word_problem(P, g + tuple(u) + gi + inverse(v)) for u, v in pairs):
            return ConjugacyVerdict("yes", witness=g, searched=count)
    return ConjugacyVerdict("unknown", searched=count)


def check_droms_coherent(X: SimplicialGraph) -> bool:
    """No induced cycle of length >= 4, i.e. the defining graph is chordal."""
    return nx.is_chordal(X.to_networkx())


def induced_long_cycle(X: SimplicialGraph, max_size: int = 8) -> tuple[int, ...] | None:
    """Brute-force search for a vertex set inducing a cycle of length 4..max_size."""
    G = X.to_networkx()
    for k in range(4, min(max_size, X.vertex_count) + 1):
        for S in itertools.combinations(range(X.vertex_count), k):
            H = G.subgraph(S)
            if H.number_of_edges() == k and all(d == 2 for _, d in H.degree()) and nx.is_connected(H):
                return S
    return None


def dimension(X: SimplicialGraph) -> int:
    """Size of a largest clique."""
    if X.vertex_count == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(X.to_networkx()))


def eval_hom(P: RaagPresentation, h: HomToZn, w: Sequence[Letter]) -> tuple[int, ...]:
    check_word(w, P.rank)
    if len(h.images) != P.rank:
        raise ValueError("homomorphism must be defined on every generator")
    out = [0] * h.target_rank
    for i, s in w:
        for j, x in enumerate(h.images[i]):
            out[j] += s * x
    return tuple(out)


def in_kernel(P: RaagPresentation, h: HomToZn, w: Sequence[Letter]) -> bool:
    return not any(eval_hom(P, h, w))


def iter_ball(P: RaagPresentation, radius: int) -> Iterator[Word]:
    """Stream the ball layer by layer, each layer in shortlex order."""
    yield EMPTY
    layer = [EMPTY]
    seen = {EMPTY}
    alpha = letters(P.rank)
    for r in range(radius):
        nxt = set()
        for w in layer:
            for x in alpha:
                v = raag_normal_form(P, w + (x,))
                if len(v) == r + 1 and v not in seen:
                    nxt.add(v)
        seen |= nxt
        layer = sorted(nxt, key=shortlex_key)
        yield from layer


def enumerate_ball(P: RaagPresentation, radius: int, max_elements: int = 10**6) -> list[Word]:
    """All elements of word length <= radius as normal forms, in shortlex order."""
    ball = []
    for w in iter_ball(P, radius):
        ball.append(w)
        if len(ball) > max_elements:
            raise BallOverflowError(f"ball of radius {radius} exceeds {max_elements} elements")
    return ball
