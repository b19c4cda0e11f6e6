"""Pure-numpy fallback for the lattice-search kernels.

Mirrors the compiled extension exactly: same candidate order (lexicographic,
vertex slot 0 most significant, offsets ascending), same hit test, same
return values. Candidates are processed in chunks to bound memory.
"""

import numpy as np

_CHUNK = 1 << 15


def _chunk_offsets(offsets, nvert, start, stop):
    idx = np.arange(start, stop, dtype=np.int64)
    m = len(offsets)
    digits = np.empty((idx.shape[0], nvert), dtype=np.int64)
    rem = idx
    for j in range(nvert - 1, -1, -1):
        digits[:, j] = rem % m
        rem = rem // m
    return offsets[digits]


def _endpoint_values(T, fp, fq, apu, apv, aqu, aqv, iu, iv):
    tu = T[:, iu]
    tv = T[:, iv]
    gp = fp[None, :] + apu[None, :] * tu + apv[None, :] * tv
    gq = fq[None, :] + aqu[None, :] * tu + aqv[None, :] * tv
    return gp, gq


def _segment_hits(gp, gq, targets):
    lo = np.minimum(gp, gq)
    hi = np.maximum(gp, gq)
    hit = np.zeros(lo.shape, dtype=bool)
    for a in targets:
        hit |= (lo <= a) & (a <= hi)
    return hit


def first_avoiding(offsets, fp, fq, apu, apv, aqu, aqv, iu, iv, targets, nvert):
    """Index of the first candidate hitting no target on any segment, or -1."""
    m = len(offsets)
    total = m**nvert
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        T = _chunk_offsets(offsets, nvert, start, stop)
        gp, gq = _endpoint_values(T, fp, fq, apu, apv, aqu, aqv, iu, iv)
        ok = ~_segment_hits(gp, gq, targets).any(axis=1)
        w = np.flatnonzero(ok)
        if w.size:
            return start + int(w[0])
    return -1


def collect_hit_masks(offsets, fp, fq, apu, apv, aqu, aqv, iu, iv, targets,
                      nvert, seg_comp, ncomp):
    """Distinct per-candidate hit masks over all candidates, sorted ascending."""
    m = len(offsets)
    total = m**nvert
    seg_comp = np.asarray(seg_comp)
    seen = set()
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        T = _chunk_offsets(offsets, nvert, start, stop)
        gp, gq = _endpoint_values(T, fp, fq, apu, apv, aqu, aqv, iu, iv)
        hit = _segment_hits(gp, gq, targets)
        masks = np.zeros(stop - start, dtype=np.int64)
        for c in range(ncomp):
            comp_hit = hit[:, seg_comp == c].any(axis=1)
            masks |= comp_hit.astype(np.int64) << c
        seen.update(int(v) for v in np.unique(masks))
    return sorted(seen)
