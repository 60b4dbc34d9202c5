"""Brute-force reference implementations, kept independent of the package algorithms."""

from collections import deque


def raag_rewrite_key(commutes, w):
    """Shortlex-least word reachable by commuting swaps and adjacent cancellations.

    Every word reaches a geodesic this way and geodesics of one element are linked
    by swaps, so the key identifies the element.
    """
    start = tuple(w)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for j in range(len(u) - 1):
            (i1, s1), (i2, s2) = u[j], u[j + 1]
            if i1 == i2 and s1 == -s2:
                nxt = u[:j] + u[j + 2 :]
            elif i1 != i2 and commutes(i1, i2):
                nxt = u[:j] + (u[j + 1], u[j]) + u[j + 2 :]
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    shortest = min(len(u) for u in seen)
    return min((u for u in seen if len(u) == shortest), key=lambda u: [(i, 0 if s > 0 else 1) for i, s in u])


def bs_pinch_free(m, n, w):
    """Word problem in BS(m,n) by repeated pinch removal on syllables (no coset normalization)."""
    syl = []
    for i, s in w:
        if i == 0:
            if syl and syl[-1][0] == "x":
                syl[-1] = ("x", syl[-1][1] + s)
                if syl[-1][1] == 0:
                    syl.pop()
            else:
                syl.append(("x", s))
        else:
            syl.append(("t", s))
        changed = True
        while changed:
            changed = False
            for j in range(len(syl) - 1):
                if syl[j][0] == "t" and syl[j + 1][0] == "t" and syl[j][1] == -syl[j + 1][1]:
                    del syl[j : j + 2]
                    changed = True
                    break
                if j + 2 < len(syl) and syl[j][0] == "t" and syl[j + 1][0] == "x" and syl[j + 2] == ("t", -syl[j][1]):
                    a = syl[j + 1][1]
                    if syl[j][1] < 0 and a % m == 0:
                        rep = ("x", a // m * n)
                    elif syl[j][1] > 0 and a % n == 0:
                        rep = ("x", a // n * m)
                    else:
                        continue
                    syl[j : j + 3] = [rep]
                    merged = []
                    for x in syl:
                        if merged and merged[-1][0] == "x" and x[0] == "x":
                            merged[-1] = ("x", merged[-1][1] + x[1])
                        else:
                            merged.append(x)
                    syl = [x for x in merged if x != ("x", 0)]
                    changed = True
                    break
    return not syl
