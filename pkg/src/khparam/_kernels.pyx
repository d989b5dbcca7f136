# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in _pure.py (same signatures)."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(int* parent, int a, int b) noexcept nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    if ra < rb:
        parent[rb] = ra
    elif rb < ra:
        parent[ra] = rb


def resolve_circles(quads, markers, int m):
    cdef int n = len(quads)
    cdef int* parent = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int* idx = <int*> malloc(max(m, 1) * sizeof(int))
    cdef int i, r, count = 0
    cdef int q0, q1, q2, q3
    if parent == NULL or idx == NULL:
        free(parent)
        free(idx)
        raise MemoryError()
    try:
        for i in range(m):
            parent[i] = i
            idx[i] = -1
        for i in range(n):
            q = quads[i]
            q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]
            if markers[i] > 0:
                _union(parent, q0, q1)
                _union(parent, q2, q3)
            else:
                _union(parent, q0, q3)
                _union(parent, q1, q2)
        labels = [0] * m
        for i in range(m):
            r = _find(parent, i)
            if idx[r] < 0:
                idx[r] = count
                count += 1
            labels[i] = idx[r]
        return count, labels
    finally:
        free(parent)
        free(idx)


def eliminate_unit_pivots(list cols, int nrows):
    cdef dict row_cols = {}
    cdef Py_ssize_t j, k, ncols = len(cols)
    cdef dict col, other
    cdef int rank = 0
    cdef bint changed = True
    cdef object piv, pv, f, v, nv, r
    for j in range(ncols):
        for r in (<dict> cols[j]):
            s = row_cols.get(r)
            if s is None:
                s = set()
                row_cols[r] = s
            (<set> s).add(j)
    alive = [True] * ncols
    while changed:
        changed = False
        for j in range(ncols):
            if not alive[j]:
                continue
            col = <dict> cols[j]
            piv = None
            for r, v in col.items():
                if v == 1 or v == -1:
                    if piv is None or len(<set> row_cols[r]) < len(<set> row_cols[piv]):
                        piv = r
            if piv is None:
                continue
            pv = col[piv]
            for k in list(<set> row_cols[piv]):
                if k == j:
                    continue
                other = <dict> cols[k]
                f = other[piv] * pv
                for r, v in col.items():
                    nv = other.get(r, 0) - f * v
                    if nv:
                        if r not in other:
                            (<set> row_cols[r]).add(k)
                        other[r] = nv
                    elif r in other:
                        del other[r]
                        (<set> row_cols[r]).discard(k)
            for r in col:
                (<set> row_cols[r]).discard(j)
            del row_cols[piv]
            alive[j] = False
            rank += 1
            changed = True
    rest = [cols[j] for j in range(ncols) if alive[j] and cols[j]]
    return rank, rest
