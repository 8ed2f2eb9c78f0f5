"""Systematic Reed-Solomon codec over GF(2^m), plus Hamming utilities.

The code has length n = q - 1 and corrects t = (n - k) // 2 symbol errors.
A codeword stores its parity block in positions [0, n-k) and its data block
in positions [n-k, n), with the vectors indexed from the top: data symbol i
sits at position n-1-i and parity symbol j at position n-k-1-j.  Use the
``data_positions`` / ``parity_positions`` accessors rather than hard-coding
that layout.

Encoding is parity = data x A for a k x (n-k) Cauchy matrix

    A[i][j] = u_i * v_j / (x_i + y_j)

where x_i = alpha^(n-1-i) and y_j = alpha^(n-1-k-j) are the evaluation
points of the data and parity positions, and u_i, v_j are the Lagrange
normalization products.  Equivalently the codeword is the evaluation of the
unique degree < k polynomial through the data points, so every codeword has
roots alpha^1 .. alpha^(n-k) and zero syndromes.

Decoding is classical syndrome decoding: Berlekamp-Massey for the minimal
error-locator polynomial, a Chien scan over the q - 1 nonzero elements for
the error positions, and Forney's formula for the magnitudes.  Syndromes of
the corrected word are re-checked, so a claimed success is always a valid
codeword; beyond t errors the result is either a flagged failure or a
miscorrection to some other valid codeword.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .galois import GF2m


class LengthMismatchError(ValueError):
    """Sequence length disagrees with the code geometry."""


class DegenerateParamsError(ValueError):
    """The (n, k) geometry does not describe a usable RS code."""


# ----------------------------------------------------------------------
# Hamming utilities
# ----------------------------------------------------------------------
def hamming_weight(x: Iterable) -> int:
    """Number of nonzero entries ('1' characters count as nonzero)."""
    return sum(1 for a in x if a not in (0, "0"))


def hamming_distance(x: Sequence, y: Sequence) -> int:
    """Number of positions in which two equal-length sequences differ."""
    if len(x) != len(y):
        raise LengthMismatchError(f"length mismatch: {len(x)} != {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


# ----------------------------------------------------------------------
# code geometry
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class CodeParams:
    """RS(n, k) geometry over a given field; n must equal q - 1."""

    field: GF2m
    n: int
    k: int

    def __post_init__(self):
        if self.n != self.field.q - 1:
            raise DegenerateParamsError(
                f"n must be q-1 = {self.field.q - 1}, got {self.n}"
            )
        if not 0 < self.k < self.n:
            raise DegenerateParamsError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if self.t < 1:
            raise DegenerateParamsError(
                f"RS({self.n},{self.k}) corrects t={self.t} < 1 symbols"
            )

    @property
    def t(self) -> int:
        """Correctable symbol errors."""
        return (self.n - self.k) // 2

    @property
    def n_parity(self) -> int:
        return self.n - self.k

    @property
    def data_range(self) -> range:
        """Positions of the data block."""
        return range(self.n - self.k, self.n)

    @property
    def parity_range(self) -> range:
        """Positions of the parity block."""
        return range(0, self.n - self.k)

    def data_position(self, i: int) -> int:
        """Codeword position of data symbol i (data is indexed from the top)."""
        return self.n - 1 - i

    def parity_position(self, j: int) -> int:
        """Codeword position of parity symbol j."""
        return self.n - self.k - 1 - j

    @property
    def data_positions(self) -> tuple[int, ...]:
        return tuple(self.data_position(i) for i in range(self.k))

    @property
    def parity_positions(self) -> tuple[int, ...]:
        return tuple(self.parity_position(j) for j in range(self.n - self.k))


class Codeword:
    """One n-symbol vector split into a parity block and a data block."""

    __slots__ = ("params", "symbols")

    def __init__(self, params: CodeParams, symbols: Iterable[int]):
        symbols = list(symbols)
        if len(symbols) != params.n:
            raise LengthMismatchError(
                f"codeword needs {params.n} symbols, got {len(symbols)}"
            )
        q = params.field.q
        for s in symbols:
            if not 0 <= s < q:
                raise ValueError(f"symbol {s} outside GF({q})")
        self.params = params
        self.symbols = symbols

    @property
    def data(self) -> list[int]:
        """Data symbols in vector order (d_0 first)."""
        return [self.symbols[p] for p in self.params.data_positions]

    @property
    def parity(self) -> list[int]:
        return [self.symbols[p] for p in self.params.parity_positions]

    def copy(self) -> "Codeword":
        return Codeword(self.params, self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Codeword):
            return NotImplemented
        return self.params == other.params and self.symbols == other.symbols

    def __repr__(self) -> str:
        return f"Codeword({self.symbols})"


# ----------------------------------------------------------------------
# encoder
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class CauchyGenerator:
    """Precomputed systematic generator: parity = data x matrix."""

    matrix: tuple[tuple[int, ...], ...]   # k rows, n-k columns
    x: tuple[int, ...]
    y: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]


@lru_cache(maxsize=None)
def build_cauchy(params: CodeParams) -> CauchyGenerator:
    """Build the Cauchy generator matrix for the given geometry."""
    f = params.field
    n, k = params.n, params.k
    x = tuple(f.alpha_pow(n - 1 - i) for i in range(k))
    y = tuple(f.alpha_pow(n - 1 - k - j) for j in range(n - k))
    # Distinct powers of alpha, so x_i + y_j = 0 is impossible; assert anyway.
    if set(x) & set(y):
        raise DegenerateParamsError("evaluation point collision between x and y")

    u = []
    for i in range(k):
        prod = 1
        for l in range(k):
            if l != i:
                prod = f.mul(prod, x[i] ^ x[l])
        u.append(f.inv(prod))
    v = []
    for j in range(n - k):
        prod = 1
        for l in range(k):
            prod = f.mul(prod, y[j] ^ x[l])
        v.append(prod)

    matrix = tuple(
        tuple(f.div(f.mul(u[i], v[j]), x[i] ^ y[j]) for j in range(n - k))
        for i in range(k)
    )
    return CauchyGenerator(matrix=matrix, x=x, y=y, u=tuple(u), v=tuple(v))


def encode(params: CodeParams, data: Sequence[int]) -> Codeword:
    """Systematic encode: the k data symbols appear verbatim in the codeword."""
    if len(data) != params.k:
        raise LengthMismatchError(f"need {params.k} data symbols, got {len(data)}")
    f = params.field
    q = f.q
    for d in data:
        if not 0 <= d < q:
            raise ValueError(f"data symbol {d} outside GF({q})")
    gen = build_cauchy(params)
    n, k = params.n, params.k
    symbols = [0] * n
    for i, d in enumerate(data):
        symbols[n - 1 - i] = d
    for j in range(n - k):
        p = 0
        for i in range(k):
            di = data[i]
            if di:
                p ^= f.mul(di, gen.matrix[i][j])
        symbols[n - k - 1 - j] = p
    return Codeword(params, symbols)


# ----------------------------------------------------------------------
# decoder
# ----------------------------------------------------------------------
def _symbols_of(params: CodeParams, received) -> list[int]:
    if isinstance(received, Codeword):
        return list(received.symbols)
    symbols = list(received)
    if len(symbols) != params.n:
        raise LengthMismatchError(
            f"received word needs {params.n} symbols, got {len(symbols)}"
        )
    return symbols


def syndromes(params: CodeParams, received) -> list[int]:
    """S_j = v(alpha^j) for j = 1 .. 2t; all zero iff v is a codeword."""
    symbols = _symbols_of(params, received)
    f = params.field
    exp, log = f._exp, f._log
    order = f.q - 1
    out = []
    for j in range(1, 2 * params.t + 1):
        aj = exp[j % order]
        log_aj = log[aj]
        s = 0
        for c in reversed(symbols):
            if s:
                s = exp[log[s] + log_aj]
            s ^= c
        out.append(s)
    return out


@dataclass
class DecodeResult:
    """Outcome of one decode; ``failure`` means more than t errors detected."""

    corrected: Codeword
    error_positions: tuple[int, ...] = ()
    error_magnitudes: dict[int, int] = dc_field(default_factory=dict)
    failure: bool = False


def _berlekamp_massey(f: GF2m, synd: Sequence[int]) -> tuple[list[int], int]:
    """Minimal LFSR (error locator, ascending coeffs, loc[0] = 1) for synd."""
    loc = [1]
    prev = [1]
    length = 0
    gap = 1
    prev_disc = 1
    for idx, s in enumerate(synd):
        disc = s
        for i in range(1, min(length, len(loc) - 1) + 1):
            if loc[i] and synd[idx - i]:
                disc ^= f.mul(loc[i], synd[idx - i])
        if disc == 0:
            gap += 1
            continue
        scale = f.div(disc, prev_disc)
        new = list(loc) + [0] * max(0, len(prev) + gap - len(loc))
        for i, p in enumerate(prev):
            if p:
                new[i + gap] ^= f.mul(scale, p)
        if 2 * length <= idx:
            prev = loc
            prev_disc = disc
            length = idx + 1 - length
            gap = 1
        else:
            gap += 1
        loc = new
    return f.poly_trim(loc), length


def decode(params: CodeParams, received) -> DecodeResult:
    """Correct up to t symbol errors; never raises on garbage input."""
    symbols = _symbols_of(params, received)
    word = Codeword(params, symbols)
    synd = syndromes(params, word)
    if not any(synd):
        return DecodeResult(corrected=word)

    f = params.field
    failed = DecodeResult(corrected=word.copy(), failure=True)

    loc, length = _berlekamp_massey(f, synd)
    if length > params.t or f.poly_deg(loc) != length:
        return failed

    # Chien scan: position i is in error iff loc(alpha^-i) = 0.
    positions = [
        i for i in range(params.n) if f.poly_eval(loc, f.alpha_pow(-i)) == 0
    ]
    if len(positions) != length:
        return failed

    # Forney with first consecutive root alpha^1:
    #   Y = omega(X^-1) / loc'(X^-1),  omega = S(x) * loc(x) mod x^2t.
    omega = f.poly_mul(synd, loc)[: 2 * params.t]
    deriv = [0] * max(len(loc) - 1, 1)
    for j in range(1, len(loc), 2):
        deriv[j - 1] = loc[j]

    corrected = list(symbols)
    magnitudes: dict[int, int] = {}
    for i in positions:
        x_inv = f.alpha_pow(-i)
        den = f.poly_eval(deriv, x_inv)
        if den == 0:
            return failed
        y = f.div(f.poly_eval(omega, x_inv), den)
        if y == 0:
            return failed
        magnitudes[i] = y
        corrected[i] ^= y

    fixed = Codeword(params, corrected)
    if any(syndromes(params, fixed)):
        return failed
    return DecodeResult(
        corrected=fixed,
        error_positions=tuple(sorted(positions)),
        error_magnitudes=magnitudes,
    )
