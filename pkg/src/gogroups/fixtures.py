"""Named example groups and subgroups."""

from __future__ import annotations

import re

from . import gog
from .quotients import FinitePresentation
from .raag import RaagPresentation
from .subdirect import AmbientProduct, Factor, PairWord, SubdirectInput

P4 = RaagPresentation.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
P4_PRIME = RaagPresentation.from_edges(["a'", "b'", "c'", "d'"], [("a'", "b'"), ("b'", "c'"), ("c'", "d'")])
C4 = RaagPresentation.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
TRIANGLE = RaagPresentation.from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")])
Z = RaagPresentation.from_edges("a", [])
Z2 = RaagPresentation.from_edges("ab", [("a", "b")])
F2 = RaagPresentation.from_edges("ab", [])
F2_PRIME = RaagPresentation.from_edges(["a'", "b'"], [])

# Droms' mod-2 kernel: all generators map to 1 in Z/2
DROMS_SUBGROUP = ("a^2", "a b", "a c", "a d")
# kernel of the map sending every generator to 1 in Z
SUM_KERNEL_BASIS = ("a b^-1", "b c^-1", "c d^-1")

RAAGS = {"P4": P4, "P4'": P4_PRIME, "C4": C4, "TRIANGLE": TRIANGLE, "Z": Z, "Z2": Z2, "F2": F2}
GOGS = {"P4_SPLITTING": gog.P4_SPLITTING, "TUBULAR_SWAP": gog.TUBULAR_SWAP, "Z2_POINT": gog.Z2_POINT}

_BS = re.compile(r"^BS\((-?\d+),(-?\d+)\)$")


def _pairs(A: AmbientProduct, pairs) -> tuple[PairWord, ...]:
    return tuple(PairWord(A.G1.parse(a), A.G2.parse(b)) for a, b in pairs)


P4xP4 = AmbientProduct(Factor(P4), Factor(P4_PRIME))
F2xF2 = AmbientProduct(Factor(F2), Factor(F2_PRIME))

SUBDIRECT = {
    "diagonal_p4": SubdirectInput(P4xP4, _pairs(P4xP4, [(g, g + "'") for g in "abcd"])),
    "bb_kernel_p4xp4": SubdirectInput(P4xP4, _pairs(P4xP4, [
        ("a", "a'^-1"), ("b", "a'^-1"), ("c", "1"), ("d", "a'^-1"),
        ("1", "a' b'^-1"), ("1", "b' c'^-1"), ("1", "c' d'^-1")])),
    "z_kernel_p4xp4": SubdirectInput(P4xP4, _pairs(P4xP4, [(g, g + "'") for g in "abcd"] + [
        ("a b^-1", "1"), ("b c^-1", "1"), ("c d^-1", "1"),
        ("1", "a' b'^-1"), ("1", "b' c'^-1"), ("1", "c' d'^-1")])),
    "full_product_p4xp4": SubdirectInput(P4xP4, _pairs(P4xP4, [(g, "1") for g in "abcd"]
                                                       + [("1", g + "'") for g in "abcd"])),
    "miller_free_index": SubdirectInput(F2xF2, _pairs(F2xF2, [
        ("a", "a'"), ("b", "b'"), ("a^2", "1"), ("a b", "1"), ("b a^-1", "1"),
        ("1", "a'^2"), ("1", "a' b'"), ("1", "b' a'^-1")])),
}

# the map f(a)=f(b)=f(d)=1, f(c)=0 on the first factor, 1 on every generator of the second
BB_MAP = {"a": 1, "b": 1, "c": 0, "d": 1, "a'": 1, "b'": 1, "c'": 1, "d'": 1}


def raag_fixture(name: str) -> RaagPresentation:
    try:
        return RAAGS[name]
    except KeyError:
        raise KeyError(f"unknown RAAG fixture {name!r}; known: {sorted(RAAGS)}") from None


def gog_fixture(name: str) -> gog.GraphOfGroups:
    m = _BS.match(name.replace(" ", ""))
    if m:
        return gog.baumslag_solitar_gog(int(m.group(1)), int(m.group(2)))
    try:
        return GOGS[name]
    except KeyError:
        raise KeyError(f"unknown graph-of-groups fixture {name!r}; known: {sorted(GOGS)} or BS(m,n)") from None


def factor_fixture(name: str) -> Factor:
    if name in RAAGS:
        return Factor(RAAGS[name])
    return Factor(gog_fixture(name))


def subdirect_fixture(name: str) -> SubdirectInput:
    try:
        return SUBDIRECT[name]
    except KeyError:
        raise KeyError(f"unknown subdirect fixture {name!r}; known: {sorted(SUBDIRECT)}") from None


def presentation_fixture(name: str) -> FinitePresentation:
    return factor_fixture(name).presentation()


def names() -> dict[str, list[str]]:
    return {"raag": sorted(RAAGS), "gog": sorted(GOGS) + ["BS(m,n)"], "subdirect": sorted(SUBDIRECT)}
