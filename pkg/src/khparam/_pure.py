"""Pure-Python versions of the hot loops (used when the extension is absent)."""


def resolve_circles(quads, markers, m):
    """Label each edge index 0..m-1 with its circle.

    quads[c] holds the four edge indices of crossing c in PD order and
    markers[c] is +1 (join slots 0-1, 2-3) or -1 (join 0-3, 1-2).  Circles
    are numbered by their smallest edge index.  Returns (count, labels).
    """
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    for q, mk in zip(quads, markers):
        if mk > 0:
            union(q[0], q[1])
            union(q[2], q[3])
        else:
            union(q[0], q[3])
            union(q[1], q[2])
    labels = [0] * m
    index = {}
    for x in range(m):
        r = find(x)
        if r not in index:
            index[r] = len(index)
        labels[x] = index[r]
    return len(index), labels


def eliminate_unit_pivots(cols, nrows):
    """Sparse elimination of +-1 pivots on an integer matrix.

    ``cols`` is a list of dicts {row: value} (modified in place).  Each unit
    pivot found clears its row in every other column by column operations
    and the pivot row/column are then dropped.  Returns
    (rank_found, remaining_columns) where the remaining columns no longer
    touch any eliminated row.
    """
    row_cols = {}
    for j, col in enumerate(cols):
        for r in col:
            row_cols.setdefault(r, set()).add(j)
    alive = [True] * len(cols)
    rank = 0
    changed = True
    while changed:
        changed = False
        for j in range(len(cols)):
            if not alive[j]:
                continue
            col = cols[j]
            piv = None
            for r, v in col.items():
                if v == 1 or v == -1:
                    if piv is None or len(row_cols[r]) < len(row_cols[piv]):
                        piv = r
            if piv is None:
                continue
            pv = col[piv]
            for k in list(row_cols[piv]):
                if k == j:
                    continue
                other = cols[k]
                f = other[piv] * pv  # pv is its own inverse
                for r, v in col.items():
                    nv = other.get(r, 0) - f * v
                    if nv:
                        if r not in other:
                            row_cols[r].add(k)
                        other[r] = nv
                    elif r in other:
                        del other[r]
                        row_cols[r].discard(k)
            for r in col:
                row_cols[r].discard(j)
            del row_cols[piv]
            alive[j] = False
            rank += 1
            changed = True
    rest = [cols[j] for j in range(len(cols)) if alive[j] and cols[j]]
    return rank, rest
