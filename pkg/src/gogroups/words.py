"""Generator alphabets, signed letters and free reduction.

A letter is a pair ``(index, sign)`` with ``sign`` in ``{+1, -1}``; a word is a
tuple of letters. Symbols only appear at the I/O boundary (``GenAlphabet.parse``
and ``GenAlphabet.format``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Letter = tuple[int, int]
Word = tuple[Letter, ...]

EMPTY: Word = ()


class MalformedWordError(ValueError):
    pass


@dataclass(frozen=True)
class GenAlphabet:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        for s in self.names:
            if not s or any(ch in s for ch in " ^,|") or s == "1":
                raise ValueError(f"invalid generator symbol {s!r}")

    def __len__(self):
        return len(self.names)

    def index(self, symbol: str) -> int:
        try:
            return self.names.index(symbol)
        except ValueError:
            raise MalformedWordError(f"unknown generator {symbol!r}") from None

    def parse(self, text: str) -> Word:
        """Parse ``"a b^-1 c^3"`` (or ``"1"`` for the identity). Not reduced."""
        out: list[Letter] = []
        for tok in text.split():
            if tok == "1":
                continue
            sym, _, exp = tok.partition("^")
            i = self.index(sym)
            try:
                k = int(exp) if exp else 1
            except ValueError:
                raise MalformedWordError(f"bad exponent in {tok!r}") from None
            s = 1 if k > 0 else -1
            out.extend([(i, s)] * abs(k))
        return tuple(out)

    def format(self, w: Sequence[Letter]) -> str:
        check_word(w, len(self))
        if not w:
            return "1"
        return " ".join(self.names[i] if s > 0 else f"{self.names[i]}^-1" for i, s in w)

    def generators(self) -> list[Word]:
        return [((i, 1),) for i in range(len(self))]


def check_word(w: Sequence[Letter], size: int | None = None) -> None:
    for letter in w:
        try:
            i, s = letter
        except (TypeError, ValueError):
            raise MalformedWordError(f"not a letter: {letter!r}") from None
        if not isinstance(i, int) or i < 0 or s not in (1, -1):
            raise MalformedWordError(f"not a letter: {letter!r}")
        if size is not None and i >= size:
            raise MalformedWordError(f"generator index {i} out of range for alphabet of size {size}")


def letter_key(letter: Letter) -> tuple[int, int]:
    """Sort key: index first, then ``+1`` before ``-1``."""
    return (letter[0], 0 if letter[1] > 0 else 1)


def shortlex_key(w: Sequence[Letter]):
    return (len(w), [letter_key(x) for x in w])


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((i, -s) for i, s in reversed(w))


def free_reduce(w: Sequence[Letter], size: int | None = None) -> Word:
    check_word(w, size)
    out: list[Letter] = []
    for i, s in w:
        if out and out[-1] == (i, -s):
            out.pop()
        else:
            out.append((i, s))
    return tuple(out)


def multiply(*words: Sequence[Letter]) -> Word:
    return free_reduce(tuple(x for w in words for x in w))


def power(w: Sequence[Letter], k: int) -> Word:
    base = tuple(w) if k >= 0 else inverse(w)
    return free_reduce(base * abs(k))


def is_reduced(w: Sequence[Letter]) -> bool:
    return all(w[j] != (w[j + 1][0], -w[j + 1][1]) for j in range(len(w) - 1))


def cyclically_reduce(w: Sequence[Letter]) -> tuple[Word, Word]:
    """Return ``(core, conjugator)`` with ``w = conjugator * core * conjugator^-1``."""
    w = free_reduce(w)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == (w[hi - 1][0], -w[hi - 1][1]):
        lo += 1
        hi -= 1
    return w[lo:hi], w[:lo]


def exponent_sums(w: Sequence[Letter], size: int) -> list[int]:
    sums = [0] * size
    for i, s in w:
        sums[i] += s
    return sums


def letters(size: int) -> list[Letter]:
    """All signed letters of an alphabet in enumeration order."""
    return [(i, s) for i in range(size) for s in (1, -1)]


def enumerate_reduced_words(alphabet: GenAlphabet | int, max_len: int) -> Iterator[Word]:
    """Every freely reduced word of length <= ``max_len``, once each, in shortlex order."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    size = alphabet if isinstance(alphabet, int) else len(alphabet)
    alpha = letters(size)

    def extend(prefix: list[Letter], remaining: int):
        if remaining == 0:
            yield tuple(prefix)
            return
        for x in alpha:
            if prefix and prefix[-1] == (x[0], -x[1]):
                continue
            prefix.append(x)
            yield from extend(prefix, remaining - 1)
            prefix.pop()

    for length in range(max_len + 1):
        yield from extend([], length)


def count_reduced_words(size: int, max_len: int) -> int:
    """Closed form: ``1 + sum_{n=1..L} 2k (2k-1)^(n-1)``."""
    return 1 + sum(2 * size * (2 * size - 1) ** (n - 1) for n in range(1, max_len + 1))
