"""Pure-Python bitmask kernels.

Drop-in twin of the compiled module ``indeplab._ckernels``; every function
here must stay semantically identical to its compiled counterpart.  Graphs
enter as a sequence of neighbor bitmasks (``adj[v]`` has bit ``u`` set iff
``uv`` is an edge) and vertex subsets travel as plain ints.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def mu_table(adj, n):
    """Maximum-matching sizes for every induced vertex subset.

    Returns a bytearray ``mu`` of length ``2**n`` with ``mu[S]`` the matching
    number of the subgraph induced by the subset ``S``.  Intended for small
    orders; callers enforce ``n <= 16``.
    """
    size = 1 << n
    mu = bytearray(size)
    for mask in range(3, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = mu[rest]
        nbrs = adj[v] & rest
        while nbrs:
            ul = nbrs & -nbrs
            cand = mu[rest ^ ul] + 1
            if cand > best:
                best = cand
            nbrs ^= ul
        mu[mask] = best
    return mu


def independent_set_masks(adj, n):
    """All independent subsets as bitmasks, in ascending numeric order."""
    out = []
    full = (1 << n) - 1

    def rec(v, mask, allowed):
        if v < 0:
            out.append(mask)
            return
        rec(v - 1, mask, allowed)
        bit = 1 << v
        if allowed & bit:
            rec(v - 1, mask | bit, allowed & ~adj[v])

    rec(n - 1, 0, full)
    return out


def omega_masks(adj, n):
    """Independence number and all maximum independent sets.

    Returns ``(alpha, masks)`` with ``masks`` ascending.
    """
    best = 0
    fam = [0]

    def rec(v, mask, allowed, count):
        nonlocal best, fam
        if count + allowed.bit_count() < best:
            return
        if v < 0:
            if count > best:
                best = count
                fam = [mask]
            elif count == best and mask:
                fam.append(mask)
            return
        rec(v - 1, mask, allowed & ~(1 << v), count)
        bit = 1 << v
        if allowed & bit:
            rec(v - 1, mask | bit, allowed & ~adj[v] & ~bit, count + 1)

    rec(n - 1, 0, (1 << n) - 1, 0)
    return best, fam


def critical_masks(adj, n):
    """Independence-restricted critical difference and its attaining sets.

    Returns ``(d, masks)`` where ``d = max(|I| - |N(I)|)`` over independent
    ``I`` and ``masks`` lists every independent attainer, ascending.
    """
    best = 0
    fam = [0]

    def rec(v, mask, allowed, count, nbmask):
        nonlocal best, fam
        if count + allowed.bit_count() - nbmask.bit_count() < best:
            return
        if v < 0:
            d = count - nbmask.bit_count()
            if d > best:
                best = d
                fam = [mask]
            elif d == best and mask:
                fam.append(mask)
            return
        rec(v - 1, mask, allowed & ~(1 << v), count, nbmask)
        bit = 1 << v
        if allowed & bit:
            rec(v - 1, mask | bit, allowed & ~adj[v] & ~bit, count + 1,
                nbmask | adj[v])

    rec(n - 1, 0, (1 << n) - 1, 0, 0)
    return best, fam


def subset_max_difference(adj, n):
    """Maximum of ``|X| - |N(X)|`` over every subset ``X`` of the vertices."""
    size = 1 << n
    nb = [0] * size
    best = 0
    for mask in range(1, size):
        low = mask & -mask
        nbm = nb[mask ^ low] | adj[low.bit_length() - 1]
        nb[mask] = nbm
        d = mask.bit_count() - nbm.bit_count()
        if d > best:
            best = d
    return best
