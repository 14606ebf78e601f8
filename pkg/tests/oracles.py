"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive: dense Gaussian elimination, raw
subset/codeword enumeration.  The oracles share no code with the package so
they can cross-check it.
"""

from itertools import combinations


def naive_rank(rows, p):
    """Dense Gaussian elimination over F_p on a list-of-lists copy."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] % p), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] % p:
                c = mat[i][col]
                mat[i] = [(x - c * y) % p for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def naive_min_distance(check_masks, n):
    """Min weight over all 2^n words satisfying every check (n small)."""
    best = n + 1
    for w in range(1, 1 << n):
        if all((w & row).bit_count() % 2 == 0 for row in check_masks):
            best = min(best, w.bit_count())
    return best


def naive_comb_design_counts(n, t, blocks):
    """Map t-subset -> number of blocks containing it, by raw enumeration."""
    out = {}
    for sub in combinations(range(n), t):
        out[sub] = sum(1 for b in blocks if set(sub) <= set(b))
    return out
