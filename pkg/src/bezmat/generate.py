"""Reproducible instance generation for tests and the self-test suite.

Randomness comes from splitmix64, a tiny 64-bit mixing generator chosen
so the acceptance suite reproduces bit-for-bit from a seed in any
language.  The full algorithm, so it can be reimplemented elsewhere:

    state <- (state + 0x9E3779B97F4A7C15)  mod 2^64
    z <- state
    z <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9  mod 2^64
    z <- (z XOR (z >> 27)) * 0x94D049BB133111EB  mod 2^64
    output: z XOR (z >> 31)

Instance families:

  * gen_group_invertible —  X = H @ diag(M, 0) @ H^-1 with H unimodular
    and M a unimodular core: group invertible by construction, with
    prescribed rank.

  * gen_flanders_triple  —  aligned-core triples
        A = H1 @ diag(MA, 0) @ H2,   B = H2^-1 @ diag(MB, 0) @ H1^-1,
    so  A@B = H1 @ diag(MA@MB, 0) @ H1^-1  is group invertible, and
    C = B (classical regime) or C = B + N with A@N@A = 0, where N mixes
    a right-kernel part (A@Nr = 0, columns from the Hermite kernel
    basis) and a left-kernel part (Nl@A = 0).  Then
    C@A = B@A + Nr@A lands in the form H2^-1 @ [[K,0],[S,0]] @ H2 with
    K = MB@MA unimodular, which is always group invertible — the
    group-invertibility rejection loop exists as a guard but never
    fires for this family.

  * gen_drazin_triple  —  A = H1 @ diag(MA, N) @ H2 with N an m x m
    nilpotent shift chain of index exactly k, B = H2^-1 @ diag(MB, I)
    @ H1^-1, so ind(A@B) = k precisely.  When C != B the index of C@A
    can legitimately reach k+1; instances are rejection-filtered so the
    emitted triples also satisfy ind(C@A) <= max(k, 1).

  * corollary instance makers — aligned-core triples satisfy all four
    sufficient-condition variants (engineered-true), and small frozen
    families (padded and conjugated by random unimodulars, which
    preserves every column-module equality) realize engineered-false
    instances with known failing condition names.

entry_bound caps the sampled atoms: |integer| entries, numerator and
denominator of rationals, and both the degree and the integer
coefficients of polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GenerationExhausted
from .ginverse import drazin, is_group_invertible
from .matrix import Mat, block_diag, inverse_over_ring
from .normal_forms import left_kernel_basis, right_kernel_basis
from .rings import Poly, get_ring
from .errors import NotDrazinInvertible

_RETRY_BUDGET = 64


class SplitMix64:
    """Deterministic 64-bit generator (constants above)."""

    _GAMMA = 0x9E3779B97F4A7C15
    _MIX1 = 0xBF58476D1CE4E5B9
    _MIX2 = 0x94D049BB133111EB
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + self._GAMMA) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * self._MIX1) & self._MASK
        z = ((z ^ (z >> 27)) * self._MIX2) & self._MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n); n >= 1."""
        return self.next_u64() % n

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class GenConfig:
    ring: str = "int"
    n: int = 3
    seed: int = 0
    entry_bound: int = 9
    core_rank: int = 1

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "n": self.n,
            "seed": self.seed,
            "entry_bound": self.entry_bound,
            "core_rank": self.core_rank,
        }


@dataclass(frozen=True)
class GeneratedTriple:
    A: Mat
    B: Mat
    C: Mat
    retries: int

    def __iter__(self):
        return iter((self.A, self.B, self.C))


def _rand_element(ring, rng: SplitMix64, bound: int):
    if ring.name == "int":
        return rng.int_in(-bound, bound)
    if ring.name == "rat":
        num = rng.int_in(-bound, bound)
        den = rng.int_in(1, max(bound, 1))
        return Fraction(num, den)
    # polyrat: degree <= bound, integer coefficients in [-bound, bound]
    deg = rng.below(bound + 1)
    coeffs = [Fraction(rng.int_in(-bound, bound)) for _ in range(deg + 1)]
    return Poly(coeffs)


def random_matrix(cfg: GenConfig, m: int | None = None, n: int | None = None) -> Mat:
    ring = get_ring(cfg.ring)
    rng = SplitMix64(cfg.seed)
    return _random_matrix(ring, rng, m if m is not None else cfg.n,
                          n if n is not None else cfg.n, cfg.entry_bound)


def _random_matrix(ring, rng, m, n, bound) -> Mat:
    return Mat.from_rows(
        ring, [[_rand_element(ring, rng, bound) for _ in range(n)] for _ in range(m)]
    )


def _shear_coefficient(ring, rng):
    """Small nonzero multiplier for elementary row/column operations,
    kept tiny so unimodular factors do not blow up entry sizes."""
    if ring.name == "int":
        return rng.choice([-2, -1, 1, 2])
    if ring.name == "rat":
        return Fraction(rng.choice([-2, -1, 1, 2]))
    c0 = Fraction(rng.int_in(-1, 1))
    c1 = Fraction(rng.choice([-1, 1])) if rng.below(2) else Fraction(0)
    p = Poly([c0, c1])
    if p.is_zero():
        p = Poly([Fraction(1)])
    return p


def _random_unimodular(ring, rng, n: int) -> Mat:
    """Product of elementary factors: shears, swaps, sign flips."""
    if n == 0:
        return Mat.identity(ring, 0)
    rows = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    steps = n + rng.below(n + 3)
    for _ in range(steps):
        kind = rng.below(4)
        if kind < 2 and n >= 2:  # row shear
            i = rng.below(n)
            j = rng.below(n - 1)
            if j >= i:
                j += 1
            c = _shear_coefficient(ring, rng)
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        elif kind == 2 and n >= 2:  # swap
            i = rng.below(n)
            j = rng.below(n - 1)
            if j >= i:
                j += 1
            rows[i], rows[j] = rows[j], rows[i]
        else:  # sign flip
            i = rng.below(n)
            rows[i] = [-x for x in rows[i]]
    return Mat.from_rows(ring, rows)


def random_unimodular(cfg: GenConfig, n: int | None = None) -> Mat:
    ring = get_ring(cfg.ring)
    rng = SplitMix64(cfg.seed)
    return _random_unimodular(ring, rng, n if n is not None else cfg.n)


def _core_form(ring, rng, n: int, r: int):
    """(H, Hinv, D=diag(M, 0), M) with H unimodular and M unimodular r x r."""
    h = _random_unimodular(ring, rng, n)
    hinv = inverse_over_ring(h)
    m_core = _random_unimodular(ring, rng, r)
    d = block_diag(m_core, Mat.zeros(ring, n - r, n - r))
    return h, hinv, d, m_core


def gen_group_invertible(cfg: GenConfig) -> Mat:
    """X = H @ diag(M, 0) @ H^-1: group invertible with rank core_rank."""
    if cfg.core_rank > cfg.n:
        raise ValueError("core_rank must not exceed n")
    ring = get_ring(cfg.ring)
    rng = SplitMix64(cfg.seed)
    h, hinv, d, _ = _core_form(ring, rng, cfg.n, cfg.core_rank)
    return h @ d @ hinv


def _perturbation(ring, rng, a: Mat, bound: int) -> Mat:
    """Random N with A @ N @ A == 0: a right-kernel part (A @ Nr = 0)
    plus a left-kernel part (Nl @ A = 0)."""
    n = a.n
    use_right = rng.below(2) == 1
    use_left = rng.below(2) == 1
    if not use_right and not use_left:
        use_right = True
    total = Mat.zeros(ring, n, n)
    if use_right:
        kb = right_kernel_basis(a)  # n x d
        if kb.n:
            coeffs = _random_matrix(ring, rng, kb.n, n, bound)
            total = total + kb @ coeffs
    if use_left:
        lb = left_kernel_basis(a)  # d x n
        if lb.m:
            coeffs = _random_matrix(ring, rng, n, lb.m, bound)
            total = total + coeffs @ lb
    return total


def gen_flanders_triple(cfg: GenConfig, c_equals_b: bool) -> GeneratedTriple:
    """Triple with A@B@A == A@C@A and both A@B, C@A group invertible."""
    if cfg.core_rank > cfg.n:
        raise ValueError("core_rank must not exceed n")
    ring = get_ring(cfg.ring)
    rng = SplitMix64(cfg.seed)
    n, r = cfg.n, cfg.core_rank
    for retries in range(_RETRY_BUDGET):
        h1, h1inv, da, _ = _core_form(ring, rng, n, r)
        h2, h2inv, db, _ = _core_form(ring, rng, n, r)
        a = h1 @ da @ h2
        b = h2inv @ db @ h1inv
        if c_equals_b:
            c = b
        else:
            c = b + _perturbation(ring, rng, a, cfg.entry_bound)
        assert a @ b @ a == a @ c @ a
        if is_group_invertible(a @ b) and is_group_invertible(c @ a):
            return GeneratedTriple(A=a, B=b, C=c, retries=retries)
    raise GenerationExhausted(
        f"no acceptable triple after {_RETRY_BUDGET} attempts (seed {cfg.seed})"
    )


def _nilpotent_chain(ring, m: int, k: int) -> Mat:
    """m x m shift chain with k-1 superdiagonal ones: index exactly k."""
    rows = [[ring.zero] * m for _ in range(m)]
    for i in range(k - 1):
        rows[i][i + 1] = ring.one
    return Mat.from_rows(ring, rows) if m else Mat.zeros(ring, 0, 0)


def gen_drazin_triple(cfg: GenConfig, k: int, c_equals_b: bool) -> GeneratedTriple:
    """Triple with A@B@A == A@C@A, ind(A@B) == k exactly, and
    ind(C@A) <= max(k, 1) so power witnesses with s == k succeed."""
    ring = get_ring(cfg.ring)
    rng = SplitMix64(cfg.seed)
    n, r = cfg.n, cfg.core_rank
    m = n - r
    if k < 1:
        raise ValueError("k must be at least 1")
    if m < k:
        raise ValueError("need n - core_rank >= k for a chain of index k")
    for retries in range(_RETRY_BUDGET):
        h1 = _random_unimodular(ring, rng, n)
        h1inv = inverse_over_ring(h1)
        h2 = _random_unimodular(ring, rng, n)
        h2inv = inverse_over_ring(h2)
        ma = _random_unimodular(ring, rng, r)
        mb = _random_unimodular(ring, rng, r)
        chain = _nilpotent_chain(ring, m, k)
        a = h1 @ block_diag(ma, chain) @ h2
        b = h2inv @ block_diag(mb, Mat.identity(ring, m)) @ h1inv
        if c_equals_b:
            c = b
        else:
            c = b + _perturbation(ring, rng, a, cfg.entry_bound)
        assert a @ b @ a == a @ c @ a
        dr = drazin(a @ b)
        assert dr.index == k, "chain construction must give ind(A@B) == k"
        try:
            ca_index = drazin(c @ a).index
        except NotDrazinInvertible:
            continue
        if ca_index <= max(k, 1):
            return GeneratedTriple(A=a, B=b, C=c, retries=retries)
    raise GenerationExhausted(
        f"no index-{k} triple after {_RETRY_BUDGET} attempts (seed {cfg.seed})"
    )


# ---------------------------------------------------------------------------
# engineered corollary-variant instances (integer ring)


def gen_corollary_true(cfg: GenConfig, c_equals_b: bool = False) -> GeneratedTriple:
    """Aligned-core triples satisfy every variant's column-module
    equalities, so one family serves all four variants."""
    return gen_flanders_triple(cfg, c_equals_b)


def gen_corollary_false(cfg: GenConfig, variant: str):
    """(A, B, C, expected_failed_names) over the integers with
    A@B@A == A@C@A but the variant's conditions engineered to fail.

    Each family embeds a 2x2 seed block into n x n (identity tail) and
    conjugates all three matrices by one shared random unimodular P.
    Simultaneous conjugation preserves products, the shared-middle
    hypothesis, and the truth value of every column-module equality,
    so the failing-condition names are known exactly in advance.

    Seed blocks (verified by direct column-module computation):
      cor22: A0=diag(2,0), B0=C0=diag(3,1): columns of A span 2Z x 0
             but A@B@A spans 12Z x 0.
      cor23: A0=diag(2,0), B0=C0=I: A-module equals AB-module (both
             2Z x 0) but B spans Z^2 while B@A spans 2Z x 0.
      thm22: A0=diag(1,0), B0=C0=[[2,2],[c,d]]: AB and ABA both span
             2Z x 0, but C@A@B spans twice the C@A module Z*(2,c).
      cor24: A0=[[2,1],[0,0]], B0=C0=I: AC = A, so the first equality
             holds, but A@B@A = A^2 = 2A spans twice the A module —
             only the second equality fails; the alternate family
             A0=diag(1,0), B0=C0=diag(3,1) fails both.
    """
    if cfg.ring != "int":
        raise ValueError("engineered corollary families are integer-only")
    if cfg.n < 2:
        raise ValueError("need n >= 2 to embed the seed blocks")
    rng = SplitMix64(cfg.seed)
    n, bound = cfg.n, cfg.entry_bound
    if variant == "cor22":
        a0, b0 = [[2, 0], [0, 0]], [[3, 0], [0, 1]]
        c0 = b0
        failed = ("Rr(A)=Rr(ABA)",)
    elif variant == "cor23":
        a0, b0 = [[2, 0], [0, 0]], [[1, 0], [0, 1]]
        c0 = b0
        failed = ("Rr(B)=Rr(BA)",)
    elif variant == "thm22":
        cc = rng.int_in(-bound, bound)
        dd = rng.int_in(-bound, bound)
        a0 = [[1, 0], [0, 0]]
        b0 = [[2, 2], [cc, dd]]
        c0 = b0
        failed = ("Rr(CA)=Rr(CAB)",)
    elif variant == "cor24":
        if rng.below(2):
            a0, b0 = [[2, 1], [0, 0]], [[1, 0], [0, 1]]
            c0 = b0
            failed = ("Rr(A)=Rr(ABA)",)
        else:
            a0, b0 = [[1, 0], [0, 0]], [[3, 0], [0, 1]]
            c0 = b0
            failed = ("Rr(A)=Rr(AC)", "Rr(A)=Rr(ABA)")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    # one shared conjugator: draw it once, apply to all three
    ring = get_ring("int")
    base_a = block_diag(Mat.from_rows(ring, a0), Mat.identity(ring, n - 2))
    base_b = block_diag(Mat.from_rows(ring, b0), Mat.identity(ring, n - 2))
    base_c = block_diag(Mat.from_rows(ring, c0), Mat.identity(ring, n - 2))
    p = _random_unimodular(ring, rng, n)
    pinv = inverse_over_ring(p)
    return (p @ base_a @ pinv, p @ base_b @ pinv, p @ base_c @ pinv, failed)
