"""Dense square linear solves, exact and binary64.

The exact backend clears denominators row by row and runs fraction-free
(Bareiss) elimination so intermediate entries stay minors of the integer
matrix instead of swelling arbitrarily; gmpy2 integers carry the big-int
arithmetic when available. The float backend is LAPACK partial-pivot LU
with an explicit relative pivot threshold and one refinement pass.
"""

import math
from fractions import Fraction
from functools import reduce

import numpy as np
import scipy.linalg

from .errors import SingularSystem
from ._scalars import is_exact

try:
    from gmpy2 import mpz as _mpz, mpq as _mpq, fmms as _fmms, divexact as _divexact

    def _bareiss_cell(pk, x, fi, y, prev):
        return _divexact(_fmms(pk, x, fi, y), prev)
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = int
    _mpq = Fraction

    def _bareiss_cell(pk, x, fi, y, prev):
        return (pk * x - fi * y) // prev

FLOAT_PIVOT_RTOL = 1e-12
FLOAT_RESIDUAL_RTOL = 1e-10


class DenseSystem:
    """An n x n matrix with a right-hand side, scalars exact or float."""

    def __init__(self, matrix, rhs):
        matrix = [list(row) for row in matrix]
        rhs = list(rhs)
        n = len(matrix)
        if n == 0:
            raise ValueError("empty system")
        if any(len(row) != n for row in matrix):
            raise ValueError("matrix is not square")
        if len(rhs) != n:
            raise ValueError("rhs length does not match matrix dimension")
        self.n = n
        self.matrix = matrix
        self.rhs = rhs

    def is_exact(self):
        return all(
            is_exact(v) for row in self.matrix for v in row
        ) and all(is_exact(v) for v in self.rhs)


def solve(system):
    """Solve system.matrix @ x = system.rhs.

    Exact inputs are solved exactly (Fractions out); anything carrying a
    float goes through the binary64 backend. Raises SingularSystem when
    elimination finds no acceptable pivot.
    """
    if system.is_exact():
        return solve_exact(system.matrix, system.rhs)
    return solve_float(system.matrix, system.rhs)


DIXON_MIN_N = 64


def solve_exact(matrix, rhs):
    n = len(matrix)
    rows = [_cleared_row(matrix[i], rhs[i]) for i in range(n)]
    if n >= DIXON_MIN_N:
        solution = _solve_dixon(rows, n)
        if solution is not None:
            return solution
    return _solve_bareiss(rows, n)


def _solve_bareiss(rows, n):
    rows = [list(r) for r in rows]
    zero = _mpz(0)
    prev = _mpz(1)
    for k in range(n):
        piv = _pick_pivot(rows, k, n)
        if piv is None:
            raise SingularSystem("no nonzero pivot in column %d" % k)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
        rk = rows[k]
        pk = rk[k]
        rk_tail = rk[k + 1:]
        for i in range(k + 1, n):
            ri = rows[i]
            fi = ri[k]
            head = [zero] * (k + 1)
            if fi:
                rows[i] = head + [
                    _bareiss_cell(pk, x, fi, y, prev)
                    for x, y in zip(ri[k + 1:], rk_tail)
                ]
            else:
                rows[i] = head + [(pk * x) // prev for x in ri[k + 1:]]
        prev = pk

    # back substitution over rationals on the integer triangle
    x = [None] * n
    for i in range(n - 1, -1, -1):
        s = rows[i][n]
        row = rows[i]
        for j in range(i + 1, n):
            s -= row[j] * x[j]
        x[i] = _mpq(s, row[i])
    return [Fraction(int(v.numerator), int(v.denominator)) for v in x]


def _cleared_row(row, rhs_value):
    vals = [Fraction(v) for v in row] + [Fraction(rhs_value)]
    den = reduce(math.lcm, (v.denominator for v in vals), 1)
    return [_mpz(v.numerator * (den // v.denominator)) for v in vals]


def _pick_pivot(rows, k, n):
    # smallest nonzero entry (by bit size) moderates coefficient growth
    piv = None
    best = None
    for i in range(k, n):
        v = rows[i][k]
        if v:
            size = abs(v).bit_length()
            if best is None or size < best:
                best = size
                piv = i
    return piv


# ---------------------------------------------------------------------------
# p-adic (Dixon) acceleration for large exact systems
#
# One LU factorization mod a word-size prime, then linear lifting: each
# step solves A x_i = r_i (mod p) through the factorization and divides
# the updated residual by p exactly. The p-adic expansion is rationally
# reconstructed and the candidate verified exactly; any failure (prime
# divides the determinant, reconstruction mismatch) falls back to the
# fraction-free elimination above, which is the ground truth.

_DIXON_PRIMES = (2147483629, 2147483587, 2147483563)


def _solve_dixon(rows, n):
    import numpy as np

    a_big = [r[:n] for r in rows]
    b_big = [r[n] for r in rows]

    for p in _DIXON_PRIMES:
        lu = _lu_mod_p(a_big, n, p, np)
        if lu is None:
            continue
        return _dixon_lift(a_big, b_big, n, p, lu, np)
    return None


def _lu_mod_p(a_big, n, p, np):
    u = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        row = a_big[i]
        u[i] = [int(v % p) for v in row]
    perm = np.arange(n)
    for k in range(n):
        col = u[k:, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return None
        piv = k + int(nz[0])
        if piv != k:
            u[[k, piv]] = u[[piv, k]]
            perm[[k, piv]] = perm[[piv, k]]
        inv = pow(int(u[k, k]), -1, p)
        mults = (u[k + 1:, k] * inv) % p
        u[k + 1:, k] = mults
        if k + 1 < n:
            u[k + 1:, k + 1:] = (
                u[k + 1:, k + 1:] - mults[:, None] * u[k, k + 1:][None, :]
            ) % p
    inv_diag = np.array([pow(int(u[k, k]), -1, p) for k in range(n)],
                        dtype=np.int64)
    return u, perm, inv_diag


def _solve_mod_p(lu_data, rhs, n, p, np):
    u, perm, inv_diag = lu_data
    y = rhs[perm].copy()
    for k in range(n - 1):
        y[k + 1:] = (y[k + 1:] - u[k + 1:, k] * y[k]) % p
    for k in range(n - 1, -1, -1):
        y[k] = (y[k] * inv_diag[k]) % p
        if k:
            y[:k] = (y[:k] - u[:k, k] * y[k]) % p
    return y


def _dixon_lift(a_big, b_big, n, p, lu_data, np):
    # step budget from a Hadamard-style bound on numerators/denominators;
    # checkpoints attempt reconstruction early since the true determinant
    # is usually far below the bound
    log_h = 0.0
    for row in a_big:
        m = max(abs(v) for v in row)
        log_h += (m.bit_length() if m else 1) + 0.5 * math.log2(n)
    mb = max(abs(v) for v in b_big)
    log_bound = 2 * log_h + (mb.bit_length() if mb else 1) + math.log2(n) + 8
    steps = int(log_bound / math.log2(p)) + 8
    checkpoints = sorted(
        {max(steps // 8, 1) * k for k in (2, 3, 4, 5, 6, 7)} | {steps}
    )

    r = [_mpz(v) for v in b_big]
    digits = []
    done = 0
    for stop in checkpoints:
        while done < stop:
            r_mod = np.array([int(v % p) for v in r], dtype=np.int64)
            x_i = _solve_mod_p(lu_data, r_mod, n, p, np)
            digits.append(x_i)
            x_list = [_mpz(int(v)) for v in x_i]
            for i in range(n):
                row = a_big[i]
                acc = r[i]
                for aij, xj in zip(row, x_list):
                    if xj:
                        acc -= aij * xj
                r[i] = acc // p
            done += 1
        solution = _reconstruct_and_verify(a_big, b_big, digits, n, p, np)
        if solution is not None:
            return solution
    return None


def _reconstruct_and_verify(a_big, b_big, digits, n, p, np):
    x_padic = _combine_digits(digits, n, p)
    modulus = _mpz(p) ** len(digits)
    half = _mpz(math.isqrt(int(modulus // 2)))

    solution = []
    for i in range(n):
        rec = _rational_reconstruct(x_padic[i] % modulus, modulus, half)
        if rec is None:
            return None
        solution.append(rec)

    den_all = _mpz(1)
    for _, d in solution:
        den_all = den_all // math.gcd(int(den_all), int(d)) * d
    nums = [num * (den_all // d) for num, d in solution]
    for i in range(n):
        acc = -b_big[i] * den_all
        row = a_big[i]
        for aij, xj in zip(row, nums):
            if xj:
                acc += aij * xj
        if acc != 0:
            return None
    return [Fraction(int(num), int(den_all)) for num in nums]


def _combine_digits(digits, n, p):
    # balanced tree combine keeps the big-int additions quasi-linear
    level = [[_mpz(int(v)) for v in d] for d in digits]
    scale = _mpz(p)
    while len(level) > 1:
        nxt = []
        for j in range(0, len(level) - 1, 2):
            lo, hi = level[j], level[j + 1]
            nxt.append([lo[i] + scale * hi[i] for i in range(n)])
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
        scale = scale * scale
    return level[0]


def _rational_reconstruct(u, modulus, half):
    # extended Euclid stopped at the sqrt bound: u = num/den (mod modulus)
    if u == 0:
        return _mpz(0), _mpz(1)
    r0, r1 = modulus, _mpz(u)
    t0, t1 = _mpz(0), _mpz(1)
    while r1 > half:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > half:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if math.gcd(int(t1), int(r1)) != 1:
        return None
    return r1, t1


def solve_float(matrix, rhs):
    a = np.asarray(matrix)
    b = np.asarray(rhs)
    if a.dtype.kind == "c" or b.dtype.kind == "c":
        dtype = np.complex128
    else:
        dtype = np.float64
    a = a.astype(dtype)
    b = b.astype(dtype)

    colmax = np.max(np.abs(a), axis=0)
    if np.any(colmax == 0.0):
        raise SingularSystem("zero column")
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a)
    pivots = np.abs(np.diag(lu))
    bad = pivots < FLOAT_PIVOT_RTOL * colmax
    if np.any(bad):
        raise SingularSystem(
            "pivot below %.0e of initial column magnitude at index %d"
            % (FLOAT_PIVOT_RTOL, int(np.argmax(bad)))
        )
    x = scipy.linalg.lu_solve((lu, piv), b)
    # one refinement pass keeps the componentwise residual at solver noise
    for _ in range(2):
        r = b - a @ x
        scale = np.abs(a) @ np.abs(x) + np.abs(b)
        ok = np.abs(r) <= FLOAT_RESIDUAL_RTOL * np.where(scale == 0, 1.0, scale)
        if np.all(ok):
            break
        x = x + scipy.linalg.lu_solve((lu, piv), r)
    return list(x)


def residual_max(system, solution):
    """max_i |(A x - b)_i|, in the arithmetic of the inputs."""
    worst = None
    for row, b in zip(system.matrix, system.rhs):
        acc = -b
        for v, xj in zip(row, solution):
            acc += v * xj
        mag = abs(acc)
        if worst is None or mag > worst:
            worst = mag
    return worst
