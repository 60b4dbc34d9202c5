"""Baumslag-Solitar groups BS(m,n) = <x, t | t^-1 x^m t = x^n>.

Normal forms come from Britton reduction over syllables ``x^a t^s x^b ...`` with
coset representatives ``x^r``: ``0 <= r < |m|`` in front of ``t`` and
``0 <= r < |n|`` in front of ``t^-1``. Elements of the normal closure of ``x``
are written in the conjugates ``x_i = t^-i x t^i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .words import GenAlphabet, Letter, MalformedWordError, Word, check_word

BS_ALPHABET = GenAlphabet(("x", "t"))
X, T = 0, 1

XiWord = tuple[tuple[int, int], ...]


class UnsupportedParameters(ValueError):
    pass


class NotInNormalClosure(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BSParams:
    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise ValueError("m and n must be nonzero")

    @property
    def gcd_one(self) -> bool:
        return gcd(abs(self.m), abs(self.n)) == 1

    @property
    def base(self) -> int:
        return abs(self.m * self.n)


def _syllables(p: BSParams, w: Sequence[Letter]) -> tuple[list[int], list[int]]:
    """Reduced syllables: exponents xs[0..k] around crossings ts[0..k-1]."""
    check_word(w, 2)
    xs, ts = [0], []
    for i, s in w:
        if i == X:
            xs[-1] += s
            continue
        if ts and ts[-1] == -s:
            a = xs[-1]
            if ts[-1] < 0 and a % p.m == 0:  # t^-1 x^(qm) t = x^(qn)
                ts.pop(), xs.pop()
                xs[-1] += a // p.m * p.n
                continue
            if ts[-1] > 0 and a % p.n == 0:  # t x^(qn) t^-1 = x^(qm)
                ts.pop(), xs.pop()
                xs[-1] += a // p.n * p.m
                continue
        ts.append(s)
        xs.append(0)
    for i, s in enumerate(ts):
        if s > 0:
            r = xs[i] % abs(p.m)
            q = (xs[i] - r) // p.m
            xs[i], xs[i + 1] = r, xs[i + 1] + q * p.n
        else:
            r = xs[i] % abs(p.n)
            q = (xs[i] - r) // p.n
            xs[i], xs[i + 1] = r, xs[i + 1] + q * p.m
    return xs, ts


def _from_syllables(xs: Sequence[int], ts: Sequence[int]) -> Word:
    out: list[Letter] = []
    for i, a in enumerate(xs):
        out += [(X, 1 if a > 0 else -1)] * abs(a)
        if i < len(ts):
            out.append((T, ts[i]))
    return tuple(out)


def bs_normal_form(p: BSParams, w: Sequence[Letter]) -> Word:
    return _from_syllables(*_syllables(p, w))


def bs_word_problem(p: BSParams, w: Sequence[Letter]) -> bool:
    xs, ts = _syllables(p, w)
    return not ts and xs[0] == 0


def x_power_of(p: BSParams, w: Sequence[Letter]) -> int | None:
    """If w equals a power of x, its exponent."""
    xs, ts = _syllables(p, w)
    return None if ts else xs[0]


def parse(text: str) -> Word:
    return BS_ALPHABET.parse(text)


def fmt(w: Sequence[Letter]) -> str:
    return BS_ALPHABET.format(w)


def xpow(k: int) -> Word:
    return ((X, 1 if k > 0 else -1),) * abs(k)


def tpow(k: int) -> Word:
    return ((T, 1 if k > 0 else -1),) * abs(k)


def t_exponent_sum(w: Sequence[Letter]) -> int:
    check_word(w, 2)
    return sum(s for i, s in w if i == T)


def in_normal_closure_x(w: Sequence[Letter]) -> bool:
    return t_exponent_sum(w) == 0


def to_xi_word(w: Sequence[Letter]) -> XiWord:
    """Rewrite a word with t-exponent sum 0 as a product of x_i = t^-i x t^i."""
    if not in_normal_closure_x(w):
        raise NotInNormalClosure(f"t-exponent sum is {t_exponent_sum(w)}, not 0")
    e, out = 0, []
    for i, s in w:
        if i == T:
            e += s
        else:
            out.append((-e, s))
    return tuple(out)


def xi_to_word(xw: XiWord) -> Word:
    out: list[Letter] = []
    for i, s in xw:
        out += tpow(-i) + ((X, s),) + tpow(i)
    return tuple(out)


def parse_xi(data) -> XiWord:
    if isinstance(data, str):
        data = json.loads(data)
    out = []
    for item in data:
        try:
            i, s = item
        except (TypeError, ValueError):
            raise MalformedWordError(f"not an x_i factor: {item!r}") from None
        if not isinstance(i, int) or s not in (1, -1):
            raise MalformedWordError(f"not an x_i factor: {item!r}")
        out.append((i, s))
    return tuple(out)


@dataclass(frozen=True)
class MNRational:
    """Exact ``p / base^k`` with ``k`` minimal; ``base = |mn|``."""

    p: int
    k: int
    base: int

    def __post_init__(self):
        if self.base < 2 or self.k < 0:
            raise ValueError("need base >= 2 and k >= 0")
        p, k = self.p, self.k
        while k > 0 and p % self.base == 0:
            p, k = p // self.base, k - 1
        if p == 0:
            k = 0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)

    @classmethod
    def from_fraction(cls, q: Fraction, base: int) -> "MNRational":
        k = 0
        while (q * base**k).denominator != 1:
            k += 1
            if k > 10_000:
                raise ValueError(f"{q} is not in Z[1/{base}]")
        return cls(int(q * base**k), k, base)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.base**self.k)

    def __add__(self, other: "MNRational") -> "MNRational":
        if self.base != other.base:
            raise ValueError("different bases")
        return MNRational.from_fraction(self.value + other.value, self.base)

    def __neg__(self) -> "MNRational":
        return MNRational(-self.p, self.k, self.base)

    def is_zero(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return str(self.p) if self.k == 0 else f"{self.p}/{self.base}^{self.k}"


def _check_h1_params(p: BSParams) -> None:
    if not p.gcd_one:
        raise UnsupportedParameters("gcd(|m|,|n|) must be 1")
    if abs(p.m) < 2 or abs(p.n) < 2:
        raise UnsupportedParameters("need |m|, |n| >= 2")
    if p.n < 0:
        raise UnsupportedParameters("only m, n > 0 and m < 0 < n are handled")


def h1_ratio(p: BSParams) -> Fraction:
    """Image ratio f(x_{i+1}) / f(x_i) forced by x_{i+1}^m = x_i^n."""
    return Fraction(p.n, p.m)


def h1_image(p: BSParams, xw: XiWord) -> MNRational:
    """Additive image in Z[1/mn]: x_i maps to (n/m)^i."""
    _check_h1_params(p)
    r = h1_ratio(p)
    total = sum((s * r**i for i, s in xw), Fraction(0))
    return MNRational.from_fraction(total, p.base)


def commutator_membership(p: BSParams, xw: XiWord) -> bool:
    return h1_image(p, xw).is_zero()


def relator_xi(p: BSParams, i: int) -> XiWord:
    """x_{i+1}^m x_i^-n as an x_i-word."""
    def pw(j, k):
        return ((j, 1 if k > 0 else -1),) * abs(k)

    return pw(i + 1, p.m) + pw(i, -p.n)


def bezout_witnesses(p: BSParams) -> tuple[XiWord, XiWord]:
    """x_i-words mapping to 1/m and 1/n, from 1 = m k1 + n k2."""
    _check_h1_params(p)
    k1 = pow(p.m, -1, abs(p.n))
    k2 = (1 - p.m * k1) // p.n
    assert p.m * k1 + p.n * k2 == 1

    def pw(j, k):
        return ((j, 1 if k > 0 else -1),) * abs(k)

    return pw(0, k1) + pw(1, k2), pw(0, k2) + pw(-1, k1)


def stabilizing_exponent(p: BSParams, g: XiWord, verify: bool = True) -> int:
    """S = max |i| over the factors; x^((|m||n|)^S) then commutes with g."""
    S = max((abs(i) for i, _ in g), default=0)
    if verify and not verify_stabilizing(p, g, S):
        raise AssertionError("stabilizing power does not commute with g")
    return S


def verify_stabilizing(p: BSParams, g: XiWord, S: int) -> bool:
    N = p.base**S
    gw = xi_to_word(g)
    ginv = tuple((i, -s) for i, s in reversed(gw))
    return bs_word_problem(p, ginv + xpow(N) + gw + xpow(-N))


@dataclass
class PowerIdentityReport:
    M: int
    k: int
    lhs: Word  # t^-k x^A t^k as a word
    exponent: int  # x-exponent the conjugate actually equals
    predicted: int  # corrected closed form
    literal: int  # the closed form with the sign exactly as usually written
    holds: bool
    literal_holds: bool


MAX_IDENTITY_M = 4


def conjugation_power_identity(p: BSParams, M: int, k: int) -> PowerIdentityReport:
    """Check ``t^-k x^A t^k = x^B`` with ``A = |m|^M n^M`` by Britton reduction.

    For ``m, n > 0``: ``B = m^(M-k) n^k n^M``. For ``m < 0 < n`` the conjugate is
    ``x^(s B')`` with ``B' = |m|^(M-k) n^k n^M`` and ``s = (-1)^k``; the literal
    form with ``s = -1`` is reported separately.
    """
    if M > MAX_IDENTITY_M:
        raise BudgetExceeded(f"M={M} exceeds the word-length guard M <= {MAX_IDENTITY_M}")
    if not 0 <= k <= M:
        raise ValueError("need 0 <= k <= M")
    if p.n < 0:
        raise UnsupportedParameters("only m, n > 0 and m < 0 < n are handled")
    am = abs(p.m)
    A = am**M * p.n**M
    Bp = am ** (M - k) * p.n**k * p.n**M
    if p.m > 0:
        predicted = literal = Bp
    else:
        predicted = (-1) ** k * Bp
        literal = -Bp if k > 0 else Bp
    lhs = tpow(-k) + xpow(A) + tpow(k)
    e = x_power_of(p, lhs)
    if e is None:
        raise AssertionError("conjugate is not a power of x")
    return PowerIdentityReport(M, k, lhs, e, predicted, literal, e == predicted, e == literal)


def power_in_N_exponent(p: BSParams, M: int, k: int) -> int:
    """``n^M |m|^(M-k) (|m|^k - n^k)`` (sign cases m, n > 0 and m < 0 < n)."""
    if abs(p.m) == abs(p.n):
        raise ValueError("|m| = |n| is excluded")
    if not 0 < k <= M:
        raise ValueError("need 0 < k <= M")
    if p.n < 0:
        raise UnsupportedParameters("only m, n > 0 and m < 0 < n are handled")
    am = abs(p.m)
    return p.n**M * am ** (M - k) * (am**k - p.n**k)


def power_in_N_witness(p: BSParams, M: int, k: int) -> tuple[Word, int | None]:
    """``x^A (t^-k x^A t^k)^-s`` with ``A = |m|^M n^M`` and the x-power it reduces to.

    ``s`` is the sign of the conjugate's exponent, so the product is
    ``x^A`` times a conjugate of ``x^-A`` or ``x^A``; its x-power is recomputed by
    Britton reduction rather than by formula.
    """
    A = abs(p.m) ** M * p.n**M
    s = 1 if p.m > 0 else (-1) ** k
    conj = tpow(-k) + xpow(A) + tpow(k)
    if s > 0:
        conj = tuple((i, -e) for i, e in reversed(conj))
    w = xpow(A) + conj
    return w, x_power_of(p, w)
