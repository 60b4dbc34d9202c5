"""Subgroups of a direct product G1 x G2 given by generator pairs.

Fibers ``L_i`` are only ever represented by witnesses found within a budget;
every verdict here is tied to an artifact that can be re-checked.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import gog, raag
from .intlattice import abelianization_invariants
from .quotients import (
    FinitePresentation,
    SeparationCertificate,
    separation_steps,
    todd_coxeter,
)
from .words import GenAlphabet, Word, check_word, enumerate_reduced_words, free_reduce, inverse, letters


@dataclass(frozen=True)
class Budget:
    max_length: int = 8
    max_degree: int = 3
    max_steps: int = 200_000


# ---- factors ---------------------------------------------------------------

def _rename_raag(P: raag.RaagPresentation, suffix: str) -> raag.RaagPresentation:
    return raag.RaagPresentation(P.graph, GenAlphabet(tuple(n + suffix for n in P.alphabet.names)))


def _rename_gog(G: gog.GraphOfGroups, suffix: str) -> gog.GraphOfGroups:
    verts = tuple(gog.GogVertex(v.name + suffix, v.rank, tuple(g + suffix for g in v.generators))
                  for v in G.vertices)
    edges = tuple(gog.GogEdge(e.tail, e.head, e.attach_tail, e.attach_head, e.tree,
                              G.stable_letter_names[k] + suffix if not e.tree else None)
                  for k, e in enumerate(G.edges))
    return gog.GraphOfGroups(verts, edges)


@dataclass(frozen=True)
class Factor:
    """A RAAG or a graph of groups, with its word problem."""

    group: raag.RaagPresentation | gog.GraphOfGroups

    @property
    def kind(self) -> str:
        return "raag" if isinstance(self.group, raag.RaagPresentation) else "gog"

    @property
    def alphabet(self) -> GenAlphabet:
        return self.group.alphabet

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format(w)

    def key(self, w: Sequence) -> object:
        """Hashable canonical form: equal keys iff equal elements."""
        if self.kind == "raag":
            return raag.raag_normal_form(self.group, w)
        return gog.element_from_word(self.group, w)

    def normal_word(self, w: Sequence) -> Word:
        if self.kind == "raag":
            return raag.raag_normal_form(self.group, w)
        return gog.element_to_word(self.group, gog.element_from_word(self.group, w))

    def is_trivial(self, w: Sequence) -> bool:
        if self.kind == "raag":
            return raag.word_problem(self.group, w)
        return gog.word_problem(self.group, w)

    def presentation(self) -> FinitePresentation:
        if self.kind == "raag":
            return FinitePresentation(self.alphabet, tuple(self.group.relators()))
        return gog.presentation(self.group)

    def renamed(self, suffix: str) -> "Factor":
        if not suffix:
            return self
        if self.kind == "raag":
            return Factor(_rename_raag(self.group, suffix))
        return Factor(_rename_gog(self.group, suffix))

    @classmethod
    def from_json(cls, data) -> "Factor":
        if isinstance(data, str):
            data = json.loads(data)
        if "raag" in data:
            f = cls(raag.RaagPresentation.from_json(data["raag"]))
        elif "gog" in data:
            f = cls(gog.GraphOfGroups.from_json(data["gog"]))
        else:
            raise ValueError("factor needs a 'raag' or 'gog' entry")
        return f.renamed(data.get("suffix", ""))

    def to_json(self) -> dict:
        return {self.kind: self.group.to_json()}


@dataclass(frozen=True)
class AmbientProduct:
    G1: Factor
    G2: Factor

    def __post_init__(self):
        clash = set(self.G1.alphabet.names) & set(self.G2.alphabet.names)
        if clash:
            raise ValueError(f"factor alphabets overlap: {sorted(clash)}")

    def factor(self, i: int) -> Factor:
        return self.G1 if i == 1 else self.G2

    @property
    def alphabet(self) -> GenAlphabet:
        return GenAlphabet(self.G1.alphabet.names + self.G2.alphabet.names)

    def embed(self, w1: Word, w2: Word) -> Word:
        off = len(self.G1.alphabet)
        return tuple(w1) + tuple((i + off, s) for i, s in w2)

    def split(self, w: Word) -> tuple[Word, Word]:
        off = len(self.G1.alphabet)
        return (tuple(x for x in w if x[0] < off), tuple((i - off, s) for i, s in w if i >= off))

    def key(self, w: Word) -> tuple:
        a, b = self.split(w)
        return (self.G1.key(a), self.G2.key(b))

    def is_trivial(self, w: Word) -> bool:
        a, b = self.split(w)
        return self.G1.is_trivial(a) and self.G2.is_trivial(b)

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format(w)

    def presentation(self) -> FinitePresentation:
        P1, P2 = self.G1.presentation(), self.G2.presentation()
        off = P1.ngens
        rels = list(P1.relators) + [tuple((i + off, s) for i, s in r) for r in P2.relators]
        for i in range(P1.ngens):
            for j in range(P2.ngens):
                rels.append(((i, 1), (j + off, 1), (i, -1), (j + off, -1)))
        return FinitePresentation(self.alphabet, tuple(rels))

    @classmethod
    def from_json(cls, data) -> "AmbientProduct":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Factor.from_json(data["G1"]), Factor.from_json(data["G2"]))

    def to_json(self) -> dict:
        return {"G1": self.G1.to_json(), "G2": self.G2.to_json()}


@dataclass(frozen=True)
class PairWord:
    first: Word
    second: Word

    def inverse(self) -> "PairWord":
        return PairWord(inverse(self.first), inverse(self.second))


@dataclass(frozen=True)
class SubdirectInput:
    ambient: AmbientProduct
    generators: tuple[PairWord, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        for g in self.generators:
            check_word(g.first, len(self.ambient.G1.alphabet))
            check_word(g.second, len(self.ambient.G2.alphabet))

    @property
    def alphabet(self) -> GenAlphabet:
        return GenAlphabet(tuple(f"s{i + 1}" for i in range(len(self.generators))))

    def generator_words(self) -> list[Word]:
        """Generators as words in the product presentation."""
        return [self.ambient.embed(g.first, g.second) for g in self.generators]

    @classmethod
    def from_json(cls, data) -> "SubdirectInput":
        if isinstance(data, str):
            data = json.loads(data)
        amb = AmbientProduct.from_json(data["ambient"])
        gens = tuple(PairWord(amb.G1.parse(a), amb.G2.parse(b)) for a, b in data["generators"])
        S = cls(amb, gens)
        rels = tuple(S.alphabet.parse(r) for r in data.get("relators", []))
        return cls(amb, gens, rels)

    def to_json(self) -> dict:
        A = self.ambient
        return {"ambient": A.to_json(),
                "generators": [[A.G1.format(g.first), A.G2.format(g.second)] for g in self.generators],
                "relators": [self.alphabet.format(r) for r in self.relators]}


def project(S: SubdirectInput, i: int, w: Sequence) -> Word:
    """Coordinate i (1 or 2) of an abstract word in S's generators, freely reduced."""
    if i not in (1, 2):
        raise ValueError("side must be 1 or 2")
    check_word(w, len(S.generators))
    out: list = []
    for j, s in w:
        g = S.generators[j]
        part = g.first if i == 1 else g.second
        out.extend(part if s > 0 else inverse(part))
    return free_reduce(out)


# ---- fibers ------------------------------------------------------------------

@dataclass
class FiberReport:
    side: int
    found: list[PairWord]
    abstract_words: list[Word]
    radius_searched: int


def fiber_search(S: SubdirectInput, side: int, radius: int) -> FiberReport:
    """Elements of S with trivial off-side coordinate, found among words of length <= radius."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    on, off = S.ambient.factor(side), S.ambient.factor(3 - side)
    seen = set()
    found, words = [], []
    for w in enumerate_reduced_words(len(S.generators), radius):
        if not w:
            continue
        if not off.is_trivial(project(S, 3 - side, w)):
            continue
        pw = project(S, side, w)
        if on.is_trivial(pw):
            continue
        k = on.key(pw)
        if k in seen:
            continue
        seen.add(k)
        nw = on.normal_word(pw)
        found.append(PairWord(nw, ()) if side == 1 else PairWord((), nw))
        words.append(w)
    return FiberReport(side, found, words, radius)


# ---- membership ----------------------------------------------------------------

@dataclass
class MembershipVerdict:
    status: str  # "yes" | "no" | "unknown"
    witness: Word | None = None  # word over H's generators (index, sign)
    expanded: Word | None = None  # witness as a word in the ambient group
    certificate: SeparationCertificate | None = None
    positive_steps: int = 0
    negative_steps: int = 0
    trace: dict = field(default_factory=dict)


def _subgroup_ball(D, gens: Sequence[Word], max_length: int) -> Iterator[tuple[Word, Word, object]]:
    """BFS over elements of <gens>, deduplicated by canonical form.

    Yields (H-word, expanded word, key) for every new element, in layers.
    """
    ident = D.key(())
    seen = {ident}
    layer = [((), ())]
    yield (), (), ident
    alpha = letters(len(gens))
    for _ in range(max_length):
        nxt = []
        for hw, ew in layer:
            for j, s in alpha:
                if hw and hw[-1] == (j, -s):
                    continue
                g = gens[j] if s > 0 else inverse(gens[j])
                w = free_reduce(ew + g)
                k = D.key(w)
                if k in seen:
                    continue
                seen.add(k)
                item = (hw + ((j, s),), w)
                nxt.append(item)
                yield item[0], item[1], k
        layer = nxt
        if not layer:
            return


def membership_semidecide(D, H_gens: Sequence[Word], g: Word, budget: Budget = Budget()) -> MembershipVerdict:
    """Interleave a search for g among products of H_gens with a search for a separating S_n-quotient.

    ``D`` is a Factor or an AmbientProduct (anything with ``key``, ``is_trivial``
    and ``presentation``). Steps alternate 1:1 until ``budget.max_steps`` is used.
    """
    H_gens = [free_reduce(h) for h in H_gens]
    g = tuple(g)
    target = D.key(g)
    pos = _subgroup_ball(D, H_gens, budget.max_length)
    neg = separation_steps(D.presentation(), H_gens, g, budget.max_degree)
    pos_done = neg_done = False
    verdict = MembershipVerdict("unknown")
    steps = 0
    while steps < budget.max_steps and not (pos_done and neg_done):
        if not pos_done:
            steps += 1
            verdict.positive_steps += 1
            try:
                hw, ew, k = next(pos)
            except StopIteration:
                pos_done = True
            else:
                if k == target and D.is_trivial(inverse(g) + ew):
                    verdict.status, verdict.witness, verdict.expanded = "yes", hw, ew
                    return verdict
        if not neg_done and steps < budget.max_steps:
            steps += 1
            verdict.negative_steps += 1
            try:
                cert = next(neg)
            except StopIteration:
                neg_done = True
            else:
                if cert is not None:
                    verdict.status, verdict.certificate = "no", cert
                    return verdict
    verdict.trace = {"positive_exhausted": pos_done, "negative_exhausted": neg_done, "steps": steps}
    return verdict


def verify_membership(D, H_gens: Sequence[Word], g: Word, verdict: MembershipVerdict) -> bool:
    from .quotients import verify_separation

    if verdict.status == "yes":
        w = []
        for j, s in verdict.witness:
            w.extend(H_gens[j] if s > 0 else inverse(H_gens[j]))
        return D.is_trivial(inverse(tuple(g)) + tuple(w))
    if verdict.status == "no":
        return verify_separation(D.presentation(), H_gens, g, verdict.certificate)
    return False


# ---- coset covers ----------------------------------------------------------------

@dataclass
class CoverVerdict:
    status: str  # "covered" | "uncovered" | "unknown"
    radius: int
    element: Word | None = None  # first element without a factorization
    factorizations: int = 0
    decidable: bool = False


def _is_parabolic(F: Factor, words: Sequence[Word]) -> frozenset | None:
    if F.kind != "raag":
        return None
    gens = set()
    for w in words:
        w = free_reduce(w)
        if len(w) != 1:
            return None
        gens.add(w[0][0])
    return frozenset(gens)


def _ball(F: Factor, radius: int) -> list[Word]:
    if F.kind == "raag":
        return raag.enumerate_ball(F.group, radius)
    return [F.normal_word(w) for w in gog.elements_up_to(F.group, enumerate_reduced_words(len(F.alphabet), radius)).values()]


def coset_cover_check(F: Factor, subgen_words: Sequence[Word], extra: Sequence[Word], cosets: Sequence[Word],
                      c: Word, radius: int, witness_budget: int) -> CoverVerdict:
    """Does every ball element factor as h z_j c^i with h in <subgens, extra>?"""
    ball = _ball(F, radius)
    if not cosets:
        return CoverVerdict("uncovered", radius, (), 0, True)
    gens = [free_reduce(w) for w in list(subgen_words) + list(extra)]
    support = _is_parabolic(F, gens)
    decidable = support is not None and F.is_trivial(c)
    if decidable:
        def member(w):
            return all(i in support for i, _ in F.normal_word(w))
    else:
        hkeys = {k for _, _, k in _subgroup_ball(F, gens, witness_budget)}

        def member(w):
            return F.key(w) in hkeys
    cpows = [()] if decidable else [tuple(c) * i if i >= 0 else inverse(c) * -i
                                     for i in range(-witness_budget, witness_budget + 1)]
    count = 0
    for g in ball:
        ok = False
        for z in cosets:
            for ci in cpows:
                if member(tuple(g) + inverse(ci) + inverse(z)):
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return CoverVerdict("uncovered" if decidable else "unknown", radius, g, count, decidable)
        count += 1
    return CoverVerdict("covered", radius, None, count, decidable)


# ---- structure ------------------------------------------------------------------

def quotient_presentation(F: Factor | FinitePresentation, normal_gen_words: Sequence[Word]) -> FinitePresentation:
    P = F if isinstance(F, FinitePresentation) else F.presentation()
    return P.with_relators([free_reduce(w) for w in normal_gen_words])


@dataclass
class StructureReport:
    fibers: tuple[FiberReport, FiberReport]
    quotients: tuple[FinitePresentation, FinitePresentation]
    abelianizations: tuple[tuple[int, list[int]], tuple[int, list[int]]]
    quotient_orders: tuple[int | None, int | None]  # Todd-Coxeter order of G_i / L_i, None on overflow
    index_in_product: int | None
    bucket: str
    notes: list[str]

    def to_json(self, S: SubdirectInput) -> dict:
        A = S.ambient
        return {
            "fibers": [{"side": f.side, "found": [A.factor(f.side).format(p.first if f.side == 1 else p.second)
                                                  for p in f.found],
                        "radius": f.radius_searched} for f in self.fibers],
            "quotients": [q.to_json() for q in self.quotients],
            "abelianizations": [{"rank": r, "torsion": t} for r, t in self.abelianizations],
            "quotient_orders": list(self.quotient_orders),
            "index_in_product": self.index_in_product,
            "bucket": self.bucket,
            "notes": self.notes,
        }


def classify_structure(S: SubdirectInput, budget: Budget = Budget(max_length=2, max_steps=2000)) -> StructureReport:
    """Evidence for the finite-index / Z-kernel / Z^2-kernel alternatives."""
    A = S.ambient
    radius = max(1, budget.max_length)
    fibers = (fiber_search(S, 1, radius), fiber_search(S, 2, radius))
    quots, abels, orders = [], [], []
    for f in fibers:
        words = [p.first if f.side == 1 else p.second for p in f.found]
        Q = quotient_presentation(A.factor(f.side), words)
        quots.append(Q)
        abels.append(abelianization_invariants(Q))
        tc = todd_coxeter(Q, (), max_cosets=budget.max_steps)
        orders.append(tc.index if tc.status == "closed" else None)
    tc = todd_coxeter(A.presentation(), S.generator_words(), max_cosets=budget.max_steps)
    index = tc.index if tc.status == "closed" else None
    notes = []
    if index is not None:
        notes.append(f"S has index {index} in G1 x G2 (closed coset table)")
    if all(o is not None for o in orders):
        notes.append(f"G1/L1 and G2/L2 are finite of orders {orders[0]}, {orders[1]}")
    (r1, t1), (r2, t2) = abels
    if index is not None and all(o is not None for o in orders):
        bucket = "finite-index"
    elif not fibers[0].found and not fibers[1].found:
        bucket = "unknown"
        notes.append("isomorphic-to-factor: no fiber witnesses, S may be isomorphic to a factor")
    elif r1 == r2 == 1 and all(o is None for o in orders):
        bucket = "Z-kernel"
        notes.append("both quotients by found fibers abelianize to rank 1")
    elif r1 == r2 == 2 and all(o is None for o in orders):
        bucket = "Z2-kernel"
        notes.append("both quotients by found fibers abelianize to rank 2")
    else:
        bucket = "unknown"
        notes.append("evidence does not single out a case")
    return StructureReport(fibers, (quots[0], quots[1]), (abels[0], abels[1]), (orders[0], orders[1]),
                           index, bucket, notes)
