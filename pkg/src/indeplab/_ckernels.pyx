# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; semantic twin of ``indeplab._pykernels``."""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "c"

ctypedef unsigned long long u64


cdef inline int popcount(u64 x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int lowest_bit(u64 x) nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef u64 *copy_adj(object adj, int n) except NULL:
    cdef u64 *a = <u64 *> malloc((n if n else 1) * sizeof(u64))
    if a == NULL:
        raise MemoryError()
    cdef int v
    for v in range(n):
        a[v] = <u64> adj[v]
    return a


def mu_table(adj, int n):
    """Maximum-matching sizes for every induced vertex subset (n <= 16)."""
    if n > 16:
        raise ValueError("mu_table supports at most 16 vertices")
    cdef u64 size = (<u64> 1) << n
    cdef bytearray out = bytearray(size)
    cdef unsigned char[::1] mu = out
    cdef u64 *a = copy_adj(adj, n)
    cdef u64 mask, rest, nbrs, low, ul
    cdef int v, best, cand
    try:
        for mask in range(3, size):
            low = mask & (~mask + 1)
            v = lowest_bit(low)
            rest = mask ^ low
            best = mu[rest]
            nbrs = a[v] & rest
            while nbrs:
                ul = nbrs & (~nbrs + 1)
                cand = mu[rest ^ ul] + 1
                if cand > best:
                    best = cand
                nbrs ^= ul
            mu[mask] = <unsigned char> best
    finally:
        free(a)
    return out


cdef class _Search:
    cdef u64 *a
    cdef int best
    cdef list fam

    def __cinit__(self, adj, int n):
        self.a = copy_adj(adj, n)
        self.best = 0
        self.fam = [0]

    def __dealloc__(self):
        if self.a != NULL:
            free(self.a)

    cdef void collect(self, int v, u64 mask, u64 allowed):
        if v < 0:
            self.fam.append(mask)
            return
        cdef u64 bit = (<u64> 1) << v
        self.collect(v - 1, mask, allowed & ~bit)
        if allowed & bit:
            self.collect(v - 1, mask | bit, allowed & ~self.a[v] & ~bit)

    cdef void omega(self, int v, u64 mask, u64 allowed, int count):
        if count + popcount(allowed) < self.best:
            return
        if v < 0:
            if count > self.best:
                self.best = count
                self.fam = [mask]
            elif count == self.best and mask:
                self.fam.append(mask)
            return
        cdef u64 bit = (<u64> 1) << v
        self.omega(v - 1, mask, allowed & ~bit, count)
        if allowed & bit:
            self.omega(v - 1, mask | bit, allowed & ~self.a[v] & ~bit,
                       count + 1)

    cdef void critical(self, int v, u64 mask, u64 allowed, int count,
                       u64 nbmask):
        if count + popcount(allowed) - popcount(nbmask) < self.best:
            return
        cdef int d
        if v < 0:
            d = count - popcount(nbmask)
            if d > self.best:
                self.best = d
                self.fam = [mask]
            elif d == self.best and mask:
                self.fam.append(mask)
            return
        cdef u64 bit = (<u64> 1) << v
        self.critical(v - 1, mask, allowed & ~bit, count, nbmask)
        if allowed & bit:
            self.critical(v - 1, mask | bit, allowed & ~self.a[v] & ~bit,
                          count + 1, nbmask | self.a[v])


def independent_set_masks(adj, int n):
    """All independent subsets as bitmasks, ascending numeric order."""
    cdef _Search s = _Search(adj, n)
    s.fam = []
    s.collect(n - 1, 0, (((<u64> 1) << n) - 1) if n else 0)
    return s.fam


def omega_masks(adj, int n):
    """Independence number and all maximum independent sets (ascending)."""
    cdef _Search s = _Search(adj, n)
    s.omega(n - 1, 0, (((<u64> 1) << n) - 1) if n else 0, 0)
    return s.best, s.fam


def critical_masks(adj, int n):
    """Independence-restricted critical difference and attaining sets."""
    cdef _Search s = _Search(adj, n)
    s.critical(n - 1, 0, (((<u64> 1) << n) - 1) if n else 0, 0, 0)
    return s.best, s.fam


def subset_max_difference(adj, int n):
    """Maximum of |X| - |N(X)| over every vertex subset X (n <= 20)."""
    if n > 20:
        raise ValueError("subset_max_difference supports at most 20 vertices")
    cdef u64 size = (<u64> 1) << n
    cdef u64 *nb = <u64 *> malloc(size * sizeof(u64))
    if nb == NULL:
        raise MemoryError()
    cdef u64 *a = copy_adj(adj, n)
    cdef u64 mask, low, nbm
    cdef int best = 0, d
    try:
        nb[0] = 0
        for mask in range(1, size):
            low = mask & (~mask + 1)
            nbm = nb[mask ^ low] | a[lowest_bit(low)]
            nb[mask] = nbm
            d = popcount(mask) - popcount(nbm)
            if d > best:
                best = d
    finally:
        free(a)
        free(nb)
    return best
