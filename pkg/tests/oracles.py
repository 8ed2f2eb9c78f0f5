"""Independent reference implementations used only to check the library.

Everything here deliberately avoids the code paths under test: polynomial
helpers are local, syndromes are literal power sums, and the brute-force
decoder enumerates error-position subsets and solves the syndrome system
by Gaussian elimination instead of Berlekamp-Massey.
"""

from itertools import combinations


# ----------------------------------------------------------------------
# GF(2) polynomial factor search (integers as coefficient bitmasks)
# ----------------------------------------------------------------------
def gf2_clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def gf2_is_irreducible_oracle(poly: int, m: int) -> bool:
    """Enumerate factor pairs (a, b) with deg a + deg b = m, deg >= 1 each."""
    if poly.bit_length() - 1 != m:
        return False
    for a in range(2, 1 << m):
        da = a.bit_length() - 1
        if da < 1 or da >= m:
            continue
        db = m - da
        for b in range(1 << db, 1 << (db + 1)):
            if gf2_clmul(a, b) == poly:
                return False
    return True


# ----------------------------------------------------------------------
# term-by-term polynomial evaluation
# ----------------------------------------------------------------------
def eval_term_by_term(field, coeffs, x):
    """Sum of c_i * x^i with x^i built by repeated multiplication."""
    acc = 0
    xp = 1
    for c in coeffs:
        acc ^= field.mul(c, xp)
        xp = field.mul(xp, x)
    return acc


# ----------------------------------------------------------------------
# generator-polynomial remainder encoder (self-contained poly helpers)
# ----------------------------------------------------------------------
def _poly_mul(field, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] ^= field.mul(ai, bj)
    return out


def _poly_rem(field, a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = field.inv(b[-1])
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            c = field.mul(a[i], inv_lead)
            for j in range(db + 1):
                a[i - db + j] ^= field.mul(c, b[j])
    return a[:db]


def generator_poly(params):
    """g(x) with roots alpha^1 .. alpha^(n-k), ascending coefficients."""
    f = params.field
    g = [1]
    for j in range(1, params.n - params.k + 1):
        g = _poly_mul(f, g, [f.alpha_pow(j), 1])
    return g


def remainder_encode(params, data):
    """Systematic encode via division by g(x); data symbol i at position n-1-i."""
    f = params.field
    n, k = params.n, params.k
    msg = [0] * n
    for i, d in enumerate(data):
        msg[n - 1 - i] = d
    rem = _poly_rem(f, msg, generator_poly(params))
    cw = list(msg)
    for i, c in enumerate(rem):
        cw[i] ^= c
    return cw


# ----------------------------------------------------------------------
# literal syndrome sums (power sums of the received word)
# ----------------------------------------------------------------------
def direct_syndromes(params, symbols):
    """S_j = sum_i v_i * alpha^(i*j) for j = 1 .. 2t."""
    f = params.field
    out = []
    for j in range(1, 2 * params.t + 1):
        s = 0
        for i, v in enumerate(symbols):
            s ^= f.mul(v, f.alpha_pow(i * j))
        out.append(s)
    return out


# ----------------------------------------------------------------------
# brute-force minimal-error decoder
# ----------------------------------------------------------------------
def _gauss_solve(field, rows, rhs):
    """Solve the square system rows * y = rhs; None if singular."""
    size = len(rows)
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field.mul(inv, x) for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x ^ field.mul(factor, y) for x, y in zip(aug[r], aug[col])]
    return [aug[r][size] for r in range(size)]


def brute_force_decode(params, symbols):
    """Smallest error set consistent with every syndrome equation.

    Enumerates position subsets of size v = 0..t, solves the first v power
    sum equations for the magnitudes and keeps a solution only if the
    remaining 2t - v equations hold too.  Returns (corrected_symbols,
    {position: magnitude}) or None when no codeword lies within distance t.
    """
    f = params.field
    synd = direct_syndromes(params, symbols)
    if not any(synd):
        return list(symbols), {}
    for v in range(1, params.t + 1):
        for subset in combinations(range(params.n), v):
            locs = [f.alpha_pow(i) for i in subset]
            rows = [[f.pow(x, j) for x in locs] for j in range(1, v + 1)]
            mags = _gauss_solve(f, rows, synd[:v])
            if mags is None or any(y == 0 for y in mags):
                continue
            ok = True
            for j in range(v + 1, 2 * params.t + 1):
                s = 0
                for x, y in zip(locs, mags):
                    s ^= f.mul(y, f.pow(x, j))
                if s != synd[j - 1]:
                    ok = False
                    break
            if ok:
                corrected = list(symbols)
                for pos, y in zip(subset, mags):
                    corrected[pos] ^= y
                return corrected, dict(zip(subset, mags))
    return None
