"""Exact matrix rank over GF(2), GF(p) and the rationals."""
from __future__ import annotations

from typing import Sequence


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank of a 0/1 matrix whose rows are packed into Python ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                rank += 1
                break
            row ^= p
    return rank


def rank_mod_p(rows: Sequence[dict[int, int]], p: int) -> int:
    """Rank over GF(p) of a sparse matrix given as ``{column: value}`` rows."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for r in rows:
        row = {c: v % p for c, v in r.items() if v % p}
        while row:
            top = max(row)
            piv = pivots.get(top)
            if piv is None:
                inv = pow(row[top], -1, p)
                pivots[top] = {c: v * inv % p for c, v in row.items()}
                rank += 1
                break
            f = row[top]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def rank_rational(rows: Sequence[dict[int, int]], ncols: int) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer entries."""
    M = [[r.get(c, 0) for c in range(ncols)] for r in rows]
    M = [row for row in M if any(row)]
    if not M:
        return 0
    nrows = len(M)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        for r in range(rank + 1, nrows):
            row = M[r]
            a = row[col]
            b = pr[col]
            for c in range(col, ncols):
                row[c] = (row[c] * b - pr[c] * a) // prev
        prev = pr[col]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(rows: Sequence[dict[int, int]], ncols: int, characteristic: int) -> int:
    if characteristic == 2:
        packed = []
        for r in rows:
            v = 0
            for c, x in r.items():
                if x % 2:
                    v |= 1 << c
            packed.append(v)
        return rank_gf2(packed)
    if characteristic == 0:
        return rank_rational(rows, ncols)
    return rank_mod_p(rows, characteristic)
