"""Backtracking kernel shared by every exact-search entry point.

Plain Python that Cython compiles unchanged when available (see setup.py);
interpreted and compiled runs must behave identically, so nothing here may
depend on being compiled.

The search assigns vertices in the caller's order, trying colors in
ascending order; the first witness found is therefore the lexicographically
first valid assignment under that order.  Constraint sets are watched
incrementally with per-set color counts, uncolored-member counts, and the
current maximum colored color:

rule 1  at completion some color occurs exactly once in the set; a branch is
        also cut when one member is left and every color already occurs
        twice;
rule 2  at completion the maximum color occurs exactly once; a branch is cut
        early when the set already holds its maximum twice and nothing could
        exceed it, i.e. that maximum equals k;
rule 3  like rule 1 but the set's first member is designated: its color must
        be the one occurring exactly once.

Every cut only removes branches with no valid completion, so exhaustion
proofs and the lexicographic-first witness are preserved.  The optional
symmetry break (each vertex tries colors up to 1 + the maximum used so far)
is sound only for constraints invariant under palette permutation; callers
enable it for conflict-free and plain-proper searches, never unique-maximum.
"""

from __future__ import annotations

from array import array
from time import monotonic

try:
    import cython

    COMPILED = cython.compiled
except ImportError:  # pragma: no cover - exercised only without Cython installed
    COMPILED = False

    class _NoCython:
        @staticmethod
        def boundscheck(_flag):
            return lambda f: f

        @staticmethod
        def wraparound(_flag):
            return lambda f: f

    cython = _NoCython()

FOUND = 1
EXHAUSTED = 0
DEADLINE = -1


@cython.boundscheck(False)
@cython.wraparound(False)
def search(k: cython.int,
           off: cython.int[:],
           nbr: cython.int[:],
           order: cython.int[:],
           proper: cython.int,
           symbreak: cython.int,
           soff: cython.int[:],
           smem: cython.int[:],
           srule: cython.int[:],
           vsoff: cython.int[:],
           vsmem: cython.int[:],
           deadline: cython.double):
    """Search for a valid assignment of colors 1..k.

    Vertices are 0-based.  ``off``/``nbr`` is the CSR adjacency, ``order`` the
    assignment order, ``soff``/``smem`` the CSR of constraint-set members with
    ``srule`` per set, and ``vsoff``/``vsmem`` the CSR mapping each vertex to
    the sets containing it.  ``deadline`` is a monotonic-clock cutoff (0 for
    none).  All integer buffers are array('i') values.

    Returns (status, colors) with status FOUND, EXHAUSTED, or DEADLINE;
    colors is a list holding a full assignment only on FOUND.
    """
    n: cython.int = len(off) - 1
    ns: cython.int = len(soff) - 1

    color: cython.int[:] = array("i", bytes(4 * max(1, n)))
    cnt: cython.int[:] = array("i", bytes(4 * max(1, ns * k)))
    unc: cython.int[:] = array("i", bytes(4 * max(1, ns)))
    smax: cython.int[:] = array("i", bytes(4 * max(1, ns)))
    trial: cython.int[:] = array("i", bytes(4 * (n + 1)))
    maxu: cython.int[:] = array("i", bytes(4 * (n + 1)))

    s: cython.int
    for s in range(ns):
        unc[s] = soff[s + 1] - soff[s]

    nodes: cython.longlong = 0
    depth: cython.int = 0
    v: cython.int
    c: cython.int
    limit: cython.int
    placed: cython.int
    ok: cython.int
    bad: cython.int
    i: cython.int
    stop: cython.int
    base: cython.int
    rule: cython.int
    m: cython.int
    d: cython.int
    cc: cython.int
    good: cython.int

    while True:
        if depth == n:
            return FOUND, [color[i] for i in range(n)]
        v = order[depth]
        limit = k
        if symbreak and maxu[depth] + 1 < limit:
            limit = maxu[depth] + 1
        c = trial[depth] + 1
        placed = 0
        while c <= limit:
            nodes += 1
            if deadline != 0.0 and (nodes & 4095) == 0 and monotonic() > deadline:
                return DEADLINE, [color[i] for i in range(n)]
            ok = 1
            if proper:
                for i in range(off[v], off[v + 1]):
                    if color[nbr[i]] == c:
                        ok = 0
                        break
            if not ok:
                c += 1
                continue
            color[v] = c
            bad = 0
            i = vsoff[v]
            stop = vsoff[v + 1]
            while i < stop:
                s = vsmem[i]
                i += 1
                base = s * k
                cnt[base + c - 1] += 1
                unc[s] -= 1
                if c > smax[s]:
                    smax[s] = c
                rule = srule[s]
                if rule == 2:
                    m = smax[s]
                    if cnt[base + m - 1] >= 2 and (m == k or unc[s] == 0):
                        bad = 1
                        break
                elif rule == 3:
                    d = color[smem[soff[s]]]
                    if d != 0 and cnt[base + d - 1] >= 2:
                        bad = 1
                        break
                else:
                    if unc[s] == 0:
                        good = 0
                        for cc in range(base, base + k):
                            if cnt[cc] == 1:
                                good = 1
                                break
                        if not good:
                            bad = 1
                            break
                    elif unc[s] == 1:
                        good = 0
                        for cc in range(base, base + k):
                            if cnt[cc] < 2:
                                good = 1
                                break
                        if not good:
                            bad = 1
                            break
            if bad:
                _undo_sets(cnt, unc, smax, vsmem, k, vsoff[v], i, c)
                color[v] = 0
                c += 1
                continue
            placed = 1
            break
        if placed:
            trial[depth] = c
            maxu[depth + 1] = maxu[depth] if maxu[depth] >= c else c
            depth += 1
            trial[depth] = 0
        else:
            trial[depth] = 0
            depth -= 1
            if depth < 0:
                return EXHAUSTED, [color[i] for i in range(n)]
            v = order[depth]
            _undo_sets(cnt, unc, smax, vsmem, k, vsoff[v], vsoff[v + 1], color[v])
            color[v] = 0


@cython.boundscheck(False)
@cython.wraparound(False)
def _undo_sets(cnt: cython.int[:],
               unc: cython.int[:],
               smax: cython.int[:],
               vsmem: cython.int[:],
               k: cython.int,
               j0: cython.int,
               j1: cython.int,
               cw: cython.int):
    """Reverse the set updates made for a color-cw assignment (members j0..j1-1)."""
    j: cython.int = j0
    s: cython.int
    base: cython.int
    m: cython.int
    while j < j1:
        s = vsmem[j]
        base = s * k
        cnt[base + cw - 1] -= 1
        unc[s] += 1
        if cw == smax[s] and cnt[base + cw - 1] == 0:
            m = cw - 1
            while m > 0 and cnt[base + m - 1] == 0:
                m -= 1
            smax[s] = m
        j += 1


def make_csr(rows) -> tuple[array, array]:
    """Flatten a list of integer lists into (offsets, members) arrays."""
    off = array("i", [0])
    mem = array("i")
    for row in rows:
        mem.extend(row)
        off.append(len(mem))
    if not mem:
        mem.append(0)  # keep the buffer non-empty for memoryview use
    return off, mem
