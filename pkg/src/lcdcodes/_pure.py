"""Pure-Python versions of the kernels in ``_kernels.pyx``.

Same signatures and results, used when the extension is not built and as a
reference in the backend-agreement tests.
"""

import numpy as np


def rref(A, F):
    M = [list(map(int, row)) for row in np.asarray(A, dtype=np.int64)]
    rows = len(M)
    cols = len(M[0]) if rows else np.shape(A)[1]
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        piv = next((i for i in range(row, rows) if M[i][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        s = inv(M[row][col])
        if s != 1:
            M[row] = [mul(x, s) for x in M[row]]
        prow = M[row]
        for i in range(rows):
            if i != row and M[i][col]:
                f = neg(M[i][col])
                M[i] = [add(x, mul(f, y)) if y else x for x, y in zip(M[i], prow)]
        pivots.append(col)
        row += 1
    return np.array(M, dtype=np.int64).reshape(rows, cols), pivots


def det(A, F):
    M = [list(map(int, row)) for row in np.asarray(A, dtype=np.int64)]
    n = len(M)
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    d = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            d = neg(d)
        d = mul(d, M[col][col])
        s = inv(M[col][col])
        prow = M[col]
        for i in range(col + 1, n):
            if M[i][col]:
                f = neg(mul(M[i][col], s))
                M[i] = [add(x, mul(f, y)) if y else x for x, y in zip(M[i], prow)]
    return d


def matmul(A, B, F):
    X = np.asarray(A, dtype=np.int64).tolist()
    Y = np.asarray(B, dtype=np.int64)
    r, c = len(X), Y.shape[1]
    cols = Y.T.tolist()
    add, mul = F.add, F.mul
    out = np.zeros((r, c), dtype=np.int64)
    for i in range(r):
        for j in range(c):
            acc = 0
            for x, y in zip(X[i], cols[j]):
                if x and y:
                    acc = add(acc, mul(x, y))
            out[i, j] = acc
    return out


def min_weight(G, F, stop_at=1):
    rows = np.asarray(G, dtype=np.int64).tolist()
    k = len(rows)
    n = len(rows[0])
    q = F.q
    add, mul, neg = F.add, F.mul, F.neg
    deltas = [add((v + 1) % q, neg(v)) for v in range(q)]
    D = [[[mul(d, g) for g in rows[r]] for d in deltas] for r in range(k)]
    best, visited = n + 1, 0
    for lead in range(k):
        free = k - 1 - lead
        cw = list(rows[lead])
        best = min(best, sum(1 for c in cw if c))
        visited += 1
        if best <= stop_at:
            break
        dig = [0] * free
        cnt = [0] * (free + 1)
        while True:
            i = 0
            cnt[0] += 1
            while i < free and cnt[i] == q:
                cnt[i] = 0
                i += 1
                cnt[i] += 1
            if i == free:
                break
            v = dig[i]
            cw = [add(c, d) for c, d in zip(cw, D[lead + 1 + i][v])]
            dig[i] = (v + 1) % q
            visited += 1
            w = sum(1 for c in cw if c)
            if w < best:
                best = w
                if best <= stop_at:
                    break
        if best <= stop_at:
            break
    return best, visited
