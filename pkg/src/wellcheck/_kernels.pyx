# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Hot loops for the lattice perturbation search.

Candidates are vertex-offset vectors enumerated in lexicographic order
(vertex slot 0 is the most significant digit, offsets ascending). Each
candidate is tested against precomputed linear segments: segment ``s``
evaluates to ``fp[s] + apu[s]*t[iu[s]] + apv[s]*t[iv[s]]`` at one end and
``fq[s] + aqu[s]*t[iu[s]] + aqv[s]*t[iv[s]]`` at the other; the segment is
hit when some target lies between the two endpoint values.
"""

from libc.stdlib cimport free, malloc


cdef inline bint _segment_hits(double gp, double gq, double[::1] targets) noexcept nogil:
    cdef double lo = gp if gp <= gq else gq
    cdef double hi = gq if gp <= gq else gp
    cdef Py_ssize_t k
    for k in range(targets.shape[0]):
        if lo <= targets[k] and targets[k] <= hi:
            return True
    return False


def first_avoiding(double[::1] offsets,
                   double[::1] fp, double[::1] fq,
                   double[::1] apu, double[::1] apv,
                   double[::1] aqu, double[::1] aqv,
                   int[::1] iu, int[::1] iv,
                   double[::1] targets,
                   Py_ssize_t nvert):
    """Index of the first candidate hitting no target on any segment, or -1."""
    cdef Py_ssize_t m = offsets.shape[0]
    cdef Py_ssize_t nseg = fp.shape[0]
    cdef Py_ssize_t j, s
    cdef long long total = 1
    for j in range(nvert):
        total *= m
    cdef double* t = <double*> malloc(nvert * sizeof(double))
    cdef Py_ssize_t* d = <Py_ssize_t*> malloc(nvert * sizeof(Py_ssize_t))
    if t == NULL or d == NULL:
        free(t)
        free(d)
        raise MemoryError()
    for j in range(nvert):
        d[j] = 0
        t[j] = offsets[0]
    cdef long long idx = 0
    cdef bint any_hit
    cdef double tu, tv, gp, gq
    with nogil:
        while True:
            any_hit = False
            for s in range(nseg):
                tu = t[iu[s]]
                tv = t[iv[s]]
                gp = fp[s] + apu[s] * tu + apv[s] * tv
                gq = fq[s] + aqu[s] * tu + aqv[s] * tv
                if _segment_hits(gp, gq, targets):
                    any_hit = True
                    break
            if not any_hit:
                break
            idx += 1
            if idx >= total:
                idx = -1
                break
            j = nvert - 1
            while True:
                d[j] += 1
                if d[j] < m:
                    t[j] = offsets[d[j]]
                    break
                d[j] = 0
                t[j] = offsets[0]
                j -= 1
    free(t)
    free(d)
    return idx


def collect_hit_masks(double[::1] offsets,
                      double[::1] fp, double[::1] fq,
                      double[::1] apu, double[::1] apv,
                      double[::1] aqu, double[::1] aqv,
                      int[::1] iu, int[::1] iv,
                      double[::1] targets,
                      Py_ssize_t nvert,
                      int[::1] seg_comp, int ncomp):
    """Distinct per-candidate hit masks over all candidates, sorted ascending.

    Bit ``c`` of a mask is set when the candidate hits component ``c``
    (i.e. hits some segment with ``seg_comp == c``).
    """
    cdef Py_ssize_t m = offsets.shape[0]
    cdef Py_ssize_t nseg = fp.shape[0]
    cdef Py_ssize_t j, s
    cdef long long total = 1
    for j in range(nvert):
        total *= m
    seen = bytearray(1 << ncomp)
    cdef unsigned char[::1] seen_v = seen
    cdef double* t = <double*> malloc(nvert * sizeof(double))
    cdef Py_ssize_t* d = <Py_ssize_t*> malloc(nvert * sizeof(Py_ssize_t))
    if t == NULL or d == NULL:
        free(t)
        free(d)
        raise MemoryError()
    for j in range(nvert):
        d[j] = 0
        t[j] = offsets[0]
    cdef long long idx = 0
    cdef unsigned int mask
    cdef double tu, tv, gp, gq
    with nogil:
        while True:
            mask = 0
            for s in range(nseg):
                if (mask >> seg_comp[s]) & 1:
                    continue
                tu = t[iu[s]]
                tv = t[iv[s]]
                gp = fp[s] + apu[s] * tu + apv[s] * tv
                gq = fq[s] + aqu[s] * tu + aqv[s] * tv
                if _segment_hits(gp, gq, targets):
                    mask |= 1u << seg_comp[s]
            seen_v[mask] = 1
            idx += 1
            if idx >= total:
                break
            j = nvert - 1
            while True:
                d[j] += 1
                if d[j] < m:
                    t[j] = offsets[d[j]]
                    break
                d[j] = 0
                t[j] = offsets[0]
                j -= 1
    free(t)
    free(d)
    return [i for i in range(1 << ncomp) if seen[i]]
