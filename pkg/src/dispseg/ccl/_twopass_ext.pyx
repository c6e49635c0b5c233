# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
# cython: cdivision=True
"""Compiled labeling kernel: classic per-pixel two-pass scan with union-find.

Provisional ids are created in raster order and components are renumbered
by their first raster pixel, exactly like the pure-python kernel, so both
emit bit-identical labels and statistics.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline int _find(int[::1] parent, int a) nogil:
    cdef int root = a
    cdef int nxt
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


cdef inline void _union(int[::1] parent, int[::1] size, int a, int b) nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    cdef int tmp
    if ra == rb:
        return
    if size[ra] < size[rb]:
        tmp = ra
        ra = rb
        rb = tmp
    parent[rb] = ra
    size[ra] += size[rb]


def label_and_stats(mask, int connectivity):
    """Label a {0,1} uint8 mask.

    Returns ``(labels, n, area, minx, miny, maxx, maxy, sumx, sumy)`` with the
    same layout as the pure-python kernel.
    """
    cdef const unsigned char[:, ::1] m = mask
    cdef Py_ssize_t h = m.shape[0]
    cdef Py_ssize_t w = m.shape[1]

    labels_arr = np.zeros((h, w), dtype=np.int32)
    cdef int[:, ::1] lab = labels_arr

    # an isolated-pixel checkerboard needs (w*h + 1) // 2 provisional ids
    cdef Py_ssize_t cap = h * w // 2 + 3
    parent_arr = np.empty(cap, dtype=np.int32)
    size_arr = np.empty(cap, dtype=np.int32)
    cdef int[::1] parent = parent_arr
    cdef int[::1] size = size_arr

    cdef bint eight = connectivity == 8
    cdef int nxt = 1
    cdef Py_ssize_t x, y
    cdef int lbl, other

    parent[0] = 0
    size[0] = 0
    with nogil:
        for y in range(h):
            for x in range(w):
                if m[y, x] == 0:
                    continue
                lbl = 0
                if x > 0 and m[y, x - 1]:
                    lbl = lab[y, x - 1]
                if y > 0:
                    if m[y - 1, x]:
                        other = lab[y - 1, x]
                        if lbl == 0:
                            lbl = other
                        elif lbl != other:
                            _union(parent, size, lbl, other)
                    if eight:
                        if x > 0 and m[y - 1, x - 1]:
                            other = lab[y - 1, x - 1]
                            if lbl == 0:
                                lbl = other
                            elif lbl != other:
                                _union(parent, size, lbl, other)
                        if x + 1 < w and m[y - 1, x + 1]:
                            other = lab[y - 1, x + 1]
                            if lbl == 0:
                                lbl = other
                            elif lbl != other:
                                _union(parent, size, lbl, other)
                if lbl == 0:
                    parent[nxt] = nxt
                    size[nxt] = 1
                    lbl = nxt
                    nxt += 1
                lab[y, x] = lbl

    # renumber components by first raster pixel (= minimal provisional id)
    final_arr = np.zeros(nxt, dtype=np.int32)
    root_rank_arr = np.zeros(nxt, dtype=np.int32)
    cdef int[::1] final = final_arr
    cdef int[::1] root_rank = root_rank_arr
    cdef int n = 0
    cdef int p, r
    with nogil:
        for p in range(1, nxt):
            r = _find(parent, p)
            if root_rank[r] == 0:
                n += 1
                root_rank[r] = n
            final[p] = root_rank[r]

    area_arr = np.zeros(n + 1, dtype=np.int64)
    minx_arr = np.full(n + 1, w, dtype=np.int64)
    miny_arr = np.full(n + 1, h, dtype=np.int64)
    maxx_arr = np.full(n + 1, -1, dtype=np.int64)
    maxy_arr = np.full(n + 1, -1, dtype=np.int64)
    sumx_arr = np.zeros(n + 1, dtype=np.int64)
    sumy_arr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] area = area_arr
    cdef cnp.int64_t[::1] minx = minx_arr
    cdef cnp.int64_t[::1] miny = miny_arr
    cdef cnp.int64_t[::1] maxx = maxx_arr
    cdef cnp.int64_t[::1] maxy = maxy_arr
    cdef cnp.int64_t[::1] sumx = sumx_arr
    cdef cnp.int64_t[::1] sumy = sumy_arr

    cdef int f
    with nogil:
        for y in range(h):
            for x in range(w):
                p = lab[y, x]
                if p == 0:
                    continue
                f = final[p]
                lab[y, x] = f
                area[f] += 1
                if x < minx[f]:
                    minx[f] = x
                if x > maxx[f]:
                    maxx[f] = x
                if y < miny[f]:
                    miny[f] = y
                if y > maxy[f]:
                    maxy[f] = y
                sumx[f] += x
                sumy[f] += y

    return labels_arr, n, area_arr, minx_arr, miny_arr, maxx_arr, maxy_arr, sumx_arr, sumy_arr
