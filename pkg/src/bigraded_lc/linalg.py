"""Dense exact linear algebra over prime fields (and the rationals).

The prime-field path keeps matrices in float64 so the panel-blocked
elimination can ride on BLAS: entries stay below p < 2^16, products
below 2^31, and a panel-width accumulation of at most 128 products
stays far inside the 2^53 exact-integer range of float64.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

_PANEL = 96


def _as_float_mod(rows, p):
    a = np.asarray(rows, dtype=np.float64)
    if a.size:
        a = a % p
    return a


def rank_mod_p(rows, p, panel=_PANEL):
    """Rank over F_p by right-looking blocked Gaussian elimination.

    Panel columns are eliminated on a contiguous copy with reductions
    deferred (entries stay within panel * p^2 < 2^53), multipliers are
    recorded, and the trailing block receives one matmul update per
    panel, which is where essentially all the work lands.
    """
    a = _as_float_mod(rows, p)
    if a.ndim != 2 or a.size == 0:
        return 0
    if a.shape[1] > 2 * a.shape[0]:
        a = a.T
    a = np.ascontiguousarray(a)
    nrows, ncols = a.shape
    r = 0
    c = 0
    while r < nrows and c < ncols:
        cw = min(panel, ncols - c)
        nr = nrows - r
        blk = a[r:, c : c + cw].copy()
        mults = np.zeros((nr, cw), dtype=np.float64)
        invs = []
        piv_local = []
        rr = 0
        for cc in range(cw):
            if rr >= nr:
                break
            col = blk[rr:, cc] % p
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            piv = rr + int(nz[0])
            if piv != rr:
                blk[[rr, piv]] = blk[[piv, rr]]
                mults[[rr, piv]] = mults[[piv, rr]]
                a[[r + rr, r + piv]] = a[[r + piv, r + rr]]
                col[[0, piv - rr]] = col[[piv - rr, 0]]
            inv = float(pow(int(col[0]), -1, p))
            np.mod(blk[rr], p, out=blk[rr])
            blk[rr] = (blk[rr] * inv) % p
            if rr + 1 < nr:
                factors = col[1:]
                blk[rr + 1 :] -= np.outer(factors, blk[rr])
                mults[rr + 1 :, len(piv_local)] = factors
            invs.append(inv)
            piv_local.append(rr)
            rr += 1
        npiv = len(piv_local)
        if npiv and c + cw < ncols:
            trail = a[r : r + nr, c + cw :]
            piv_trail = np.empty((npiv, trail.shape[1]), dtype=np.float64)
            for k, loc in enumerate(piv_local):
                row = trail[loc]
                if k:
                    row = (row - mults[loc, :k] @ piv_trail[:k]) % p
                piv_trail[k] = (row * invs[k]) % p
            mults[piv_local, :] = 0.0
            delta = mults[:, :npiv] @ piv_trail
            np.subtract(trail, delta, out=delta)
            np.mod(delta, p, out=delta)
            trail[:] = delta
            trail[piv_local] = piv_trail
        r += npiv
        c += cw
    return r


def rref_mod_p(rows, p):
    """Fully reduced row echelon form over F_p; returns (R, pivots).

    Unblocked; intended for the small matrices in consistency checks.
    """
    a = _as_float_mod(rows, p)
    if a.ndim != 2 or a.size == 0:
        width = a.shape[1] if a.ndim == 2 else 0
        return np.zeros((0, width)), []
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        hit = np.nonzero(a[r + 1 :, c])[0]
        if hit.size:
            idx = hit + r + 1
            a[idx] = (a[idx] - np.outer(a[idx, c], a[r])) % p
        pivots.append(c)
        r += 1
    a = a[:r]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        above = np.nonzero(a[:i, c])[0]
        if above.size:
            a[above] = (a[above] - np.outer(a[above, c], a[i])) % p
    return a, pivots


def _rref_fractions(rows):
    a = [[Fraction(v) for v in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(rows, characteristic):
    """Reduced row echelon form over F_p or Q; returns (rows, pivots)."""
    if characteristic:
        mat, pivots = rref_mod_p(rows, characteristic)
        return [[int(v) for v in row] for row in mat], pivots
    return _rref_fractions(rows)


def rank(rows, characteristic):
    if characteristic:
        return rank_mod_p(rows, characteristic)
    if not len(rows):
        return 0
    return len(_rref_fractions(rows)[0])
