"""Finitely presented groups: coset enumeration, Reidemeister-Schreier, maps to S_n.

Coset tables use two columns per generator, ``2*i`` for ``x_i`` and ``2*i + 1``
for ``x_i^-1``. Permutations are tuples ``p`` with ``p[k]`` the image of point
``k``; words act on the right, so ``x y`` means "apply x, then y".
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .words import GenAlphabet, Word, check_word, free_reduce, inverse


@dataclass(frozen=True)
class FinitePresentation:
    alphabet: GenAlphabet
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        rels = []
        for r in self.relators:
            check_word(r, len(self.alphabet))
            r = free_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.alphabet)

    @classmethod
    def from_strings(cls, generators: Sequence[str], relators: Sequence[str]) -> "FinitePresentation":
        alphabet = GenAlphabet(tuple(generators))
        return cls(alphabet, tuple(alphabet.parse(r) for r in relators))

    @classmethod
    def from_json(cls, data) -> "FinitePresentation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_strings(data["generators"], data.get("relators", []))

    def to_json(self) -> dict:
        return {"generators": list(self.alphabet.names),
                "relators": [self.alphabet.format(r) for r in self.relators]}

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format(w)

    def with_relators(self, extra: Sequence[Word]) -> "FinitePresentation":
        return FinitePresentation(self.alphabet, self.relators + tuple(extra))


def _col(letter) -> int:
    i, s = letter
    return 2 * i + (0 if s > 0 else 1)


def _inv_col(c: int) -> int:
    return c ^ 1


@dataclass
class CosetTable:
    """A closed coset table. ``rows[c][col]`` is the coset reached from ``c``."""

    ngens: int
    rows: list[list[int]]

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, w: Sequence) -> int:
        for x in w:
            coset = self.rows[coset][_col(x)]
        return coset

    def permutation(self, i: int) -> tuple[int, ...]:
        return tuple(row[2 * i] for row in self.rows)

    def to_csv(self, alphabet: GenAlphabet | None = None) -> str:
        names = alphabet.names if alphabet else [f"g{i}" for i in range(self.ngens)]
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["coset"] + [n + suffix for n in names for suffix in ("", "^-1")])
        for c, row in enumerate(self.rows):
            wr.writerow([c] + row)
        return buf.getvalue()

    def to_dot(self, alphabet: GenAlphabet | None = None) -> str:
        names = alphabet.names if alphabet else [f"g{i}" for i in range(self.ngens)]
        lines = ["digraph cosets {"]
        for c, row in enumerate(self.rows):
            for i in range(self.ngens):
                lines.append(f'  {c} -> {row[2 * i]} [label="{names[i]}"];')
        lines.append("}")
        return "\n".join(lines)


@dataclass
class TCResult:
    status: str  # "closed" | "overflow"
    table: CosetTable | None = None
    cosets_defined: int = 0

    @property
    def index(self) -> int | None:
        return self.table.index if self.table else None


class _Enumerator:
    """HLT coset enumeration with union-find coincidence handling."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.defined = 1

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, col: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise OverflowError
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.defined += 1
        self.table[c][col] = d
        self.table[d][_inv_col(col)] = c

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []

        def merge(k, l):
            k, l = self.rep(k), self.rep(l)
            if k == l:
                return
            if l < k:
                k, l = l, k
            self.parent[l] = k
            queue.append(l)

        merge(a, b)
        pos = 0
        while pos < len(queue):
            e = queue[pos]
            pos += 1
            for col in range(self.ncols):
                f = self.table[e][col]
                if f is None:
                    continue
                self.table[f][_inv_col(col)] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][col] is not None:
                    merge(f1, self.table[e1][col])
                elif self.table[f1][_inv_col(col)] is not None:
                    merge(e1, self.table[f1][_inv_col(col)])
                else:
                    self.table[e1][col] = f1
                    self.table[f1][_inv_col(col)] = e1

    def scan_and_fill(self, c: int, cols: list[int]) -> None:
        t = self.table
        f, b = c, c
        i, j = 0, len(cols) - 1
        while True:
            while i <= j and t[f][cols[i]] is not None:
                f = t[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][_inv_col(cols[j])] is not None:
                b = t[b][_inv_col(cols[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][cols[i]] = b
                t[b][_inv_col(cols[i])] = f
                return
            self.define(f, cols[i])

    def compact(self) -> list[list[int]]:
        alive = [c for c in range(len(self.table)) if self.live(c)]
        new = {c: k for k, c in enumerate(alive)}
        return [[new[self.rep(x)] for x in self.table[c]] for c in alive]


def todd_coxeter(P: FinitePresentation, subgens: Sequence[Word] = (), max_cosets: int = 10_000) -> TCResult:
    """Enumerate cosets of <subgens> in P; Overflow once ``max_cosets`` would be exceeded."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    rels = [[_col(x) for x in r] for r in P.relators]
    subs = [[_col(x) for x in free_reduce(w, P.ngens)] for w in subgens]
    E = _Enumerator(P.ngens, max_cosets)
    try:
        for w in subs:
            if w:
                E.scan_and_fill(0, w)
        c = 0
        while c < len(E.table):
            for r in rels:
                if not E.live(c):
                    break
                E.scan_and_fill(c, r)
            if E.live(c):
                for col in range(E.ncols):
                    if E.table[c][col] is None:
                        E.define(c, col)
            c += 1
    except OverflowError:
        return TCResult("overflow", None, E.defined)
    return TCResult("closed", CosetTable(P.ngens, E.compact()), E.defined)


def validate_table(P: FinitePresentation, subgens: Sequence[Word], table: CosetTable) -> bool:
    """Every relator fixes every coset, subgroup generators fix coset 0, columns are inverse."""
    n = table.index
    for c in range(n):
        for col in range(2 * P.ngens):
            d = table.rows[c][col]
            if not (0 <= d < n) or table.rows[d][_inv_col(col)] != c:
                return False
    if any(table.act(c, r) != c for r in P.relators for c in range(n)):
        return False
    return all(table.act(0, w) == 0 for w in subgens)


@dataclass
class SchreierPresentation:
    presentation: FinitePresentation
    generator_words: list[Word]  # each Schreier generator as a word in the parent group
    transversal: list[Word]

    @property
    def ngens(self) -> int:
        return self.presentation.ngens


def reidemeister_schreier(P: FinitePresentation, table: CosetTable | TCResult) -> SchreierPresentation:
    """Presentation of the subgroup whose closed coset table is given.

    Generators are the Schreier generators left over after deleting the
    spanning-tree ones; no further Tietze simplification.
    """
    if isinstance(table, TCResult):
        if table.status != "closed":
            raise ValueError("coset table is not closed")
        table = table.table
    n = table.index
    transversal: list[Word | None] = [None] * n
    transversal[0] = ()
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for col in range(2 * P.ngens):
            d = table.rows[c][col]
            if transversal[d] is None:
                i, s = col // 2, (1 if col % 2 == 0 else -1)
                transversal[d] = transversal[c] + ((i, s),)
                # tree edges are recorded in the positive direction
                tree.add((c, i) if s > 0 else (d, i))
                queue.append(d)

    gens: dict[tuple[int, int], int] = {}
    names: list[str] = []
    words: list[Word] = []
    for c in range(n):
        for i in range(P.ngens):
            if (c, i) in tree:
                continue
            gens[(c, i)] = len(names)
            names.append(f"{P.alphabet.names[i]}_{c}")
            d = table.rows[c][2 * i]
            words.append(free_reduce(transversal[c] + ((i, 1),) + inverse(transversal[d])))

    def rewrite(c: int, w: Word) -> Word:
        out = []
        for i, s in w:
            if s > 0:
                if (c, i) in gens:
                    out.append((gens[(c, i)], 1))
                c = table.rows[c][2 * i]
            else:
                d = table.rows[c][2 * i + 1]
                if (d, i) in gens:
                    out.append((gens[(d, i)], -1))
                c = d
        return tuple(out)

    rels = [rewrite(c, r) for c in range(n) for r in P.relators]
    pres = FinitePresentation(GenAlphabet(tuple(names)), tuple(rels))
    return SchreierPresentation(pres, words, transversal)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def perm_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Right action: first p, then q."""
    return tuple(q[x] for x in p)


def perm_inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@dataclass(frozen=True)
class PermAssignment:
    degree: int
    perms: tuple[tuple[int, ...], ...]

    def image(self, w: Sequence) -> tuple[int, ...]:
        inv = [perm_inv(p) for p in self.perms]
        pts = list(range(self.degree))
        for i, s in w:
            p = self.perms[i] if s > 0 else inv[i]
            pts = [p[x] for x in pts]
        return tuple(pts)

    def is_homomorphism(self, P: FinitePresentation) -> bool:
        e = identity_perm(self.degree)
        return all(self.image(r) == e for r in P.relators)

    def to_json(self) -> dict:
        return {"degree": self.degree, "perms": [list(p) for p in self.perms]}

    @classmethod
    def from_json(cls, data) -> "PermAssignment":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["degree"]), tuple(tuple(int(x) for x in p) for p in data["perms"]))


class _BudgetSpent(Exception):
    pass


class _Exhausted:
    def __repr__(self):
        return "BUDGET_EXHAUSTED"


BUDGET_EXHAUSTED = _Exhausted()


def enumerate_homs(P: FinitePresentation, degree: int, budget: int | None = None) -> Iterator:
    """Yield every homomorphism P -> S_degree as a PermAssignment.

    Generators are assigned in order, permutations in lexicographic order;
    a relator is checked as soon as all its generators are assigned. If
    ``budget`` search nodes are used up, ``BUDGET_EXHAUSTED`` is yielded last.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    perms = list(itertools.permutations(range(degree)))
    e = identity_perm(degree)
    by_last: dict[int, list[Word]] = {}
    for r in P.relators:
        by_last.setdefault(max(i for i, _ in r), []).append(r)
    used = 0
    assignment: list[tuple[int, ...]] = []

    def ok(k: int) -> bool:
        partial = PermAssignment(degree, tuple(assignment))
        return all(partial.image(r) == e for r in by_last.get(k, ()))

    def search(k: int):
        nonlocal used
        if k == P.ngens:
            yield PermAssignment(degree, tuple(assignment))
            return
        for p in perms:
            if budget is not None and used >= budget:
                raise _BudgetSpent
            used += 1
            assignment.append(p)
            if ok(k):
                yield from search(k + 1)
            assignment.pop()

    try:
        yield from search(0)
    except _BudgetSpent:
        yield BUDGET_EXHAUSTED


def perm_group_closure(gens: Sequence[tuple[int, ...]], degree: int) -> set[tuple[int, ...]]:
    e = identity_perm(degree)
    group = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for h in gens:
            x = perm_mul(g, h)
            if x not in group:
                group.add(x)
                queue.append(x)
    return group


@dataclass
class SeparationCertificate:
    assignment: PermAssignment
    g_image: tuple[int, ...]
    subgroup_images: list[tuple[int, ...]]
    subgroup_order: int

    def to_json(self) -> dict:
        return {"assignment": self.assignment.to_json(), "g_image": list(self.g_image),
                "subgroup_images": [list(p) for p in self.subgroup_images],
                "subgroup_order": self.subgroup_order}

    @classmethod
    def from_json(cls, data) -> "SeparationCertificate":
        return cls(PermAssignment.from_json(data["assignment"]), tuple(data["g_image"]),
                   [tuple(p) for p in data["subgroup_images"]], int(data["subgroup_order"]))


@dataclass
class _Search:
    """Resumable search state shared with the interleaved membership procedure."""
    steps: int = 0
    exhausted: bool = False
    found: object = None
    trace: dict = field(default_factory=dict)


def separation_steps(P: FinitePresentation, subgens: Sequence[Word], g: Word, n_max: int,
                     state: _Search | None = None) -> Iterator[SeparationCertificate | None]:
    """One yield per homomorphism search node; yields a certificate when one separates."""
    state = state or _Search()
    for n in range(1, n_max + 1):
        state.trace["degree"] = n
        perms = list(itertools.permutations(range(n)))
        e = identity_perm(n)
        by_last: dict[int, list[Word]] = {}
        for r in P.relators:
            by_last.setdefault(max(i for i, _ in r), []).append(r)
        stack: list[tuple[int, int]] = [(0, 0)]
        assignment: list[tuple[int, ...]] = []
        # iterative DFS so that the caller can interleave one node at a time
        while stack:
            k, idx = stack.pop()
            del assignment[k:]
            if idx >= len(perms):
                continue
            stack.append((k, idx + 1))
            assignment.append(perms[idx])
            state.steps += 1
            partial = PermAssignment(n, tuple(assignment))
            if not all(partial.image(r) == e for r in by_last.get(k, ())):
                yield None
                continue
            if k + 1 < P.ngens:
                stack.append((k + 1, 0))
                yield None
                continue
            gi = partial.image(g)
            sub = [partial.image(w) for w in subgens]
            H = perm_group_closure(sub, n)
            if gi not in H:
                yield SeparationCertificate(partial, gi, sub, len(H))
                return
            yield None
    state.exhausted = True


def separate(P: FinitePresentation, subgen_words: Sequence[Word], g: Word, n_max: int,
             budget: int | None = None) -> SeparationCertificate | None:
    """First map to S_n (n <= n_max) sending g outside the image of <subgen_words>."""
    if budget is not None and budget <= 0:
        return None
    for used, res in enumerate(separation_steps(P, subgen_words, g, n_max), start=1):
        if res is not None:
            return res
        if budget is not None and used >= budget:
            return None
    return None


def verify_separation(P: FinitePresentation, subgen_words: Sequence[Word], g: Word,
                      cert: SeparationCertificate) -> bool:
    a = cert.assignment
    if not a.is_homomorphism(P):
        return False
    sub = [a.image(w) for w in subgen_words]
    return a.image(g) not in perm_group_closure(sub, a.degree)
