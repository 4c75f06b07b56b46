"""Unimodular similarity certificates for products sharing a middle factor.

Setting: square matrices A, B, C over the ring with

    A @ B @ A == A @ C @ A,

and both X = A@B and Y = C@A group invertible.  Then X and Y are
similar, and the similarity can be realized by an explicitly invertible
W over the ring.  The construction here is block-free to state and
fully checkable at runtime:

  1. The shared-product identity gives the intertwining X @ A == A @ Y.
  2. Compute group inverses X^#, Y^#.
  3. Core-split both: X == H1 @ diag(M1, 0) @ H1^-1 and
     Y == H2 @ diag(M2, 0) @ H2^-1 with M1, M2 invertible r1 x r1.
  4. At = H1^-1 @ A @ H2 then has zero off-diagonal blocks, because
     diag(M1, 0) @ At == At @ diag(M2, 0) and the cores are invertible.
  5. The top-left block At11 is invertible over the ring: with
     Q = Y @ Y^# @ B @ X^#, the identity A @ Q == X @ X^# (a consequence
     of the intertwining and the group-inverse equations) forces
     At11 @ G11 == I for G11 the top-left block of H2^-1 @ Q @ H1.
  6. W  = H1 @ diag(At11, I) @ H2^-1 and
     Winv = H2 @ diag(G11, I) @ H1^-1 satisfy W @ Winv == I and
     A@B == W @ (C@A) @ Winv; both are verified before returning.

Every step that the underlying theory guarantees is asserted; a failed
assertion raises InternalAssertion with a replayable instance dump,
never a silent wrong answer.  The degenerate rank-0 case yields
W = H1 @ H2^-1 through the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import faults
from .errors import (
    ConditionNotMet,
    DimensionMismatch,
    HypothesisViolated,
    IndexTooSmall,
    InternalAssertion,
    NotGroupInvertible,
    NotDrazinInvertible,
    NotSquare,
)
from .ginverse import _core_split_with, _group_inverse_attempt, drazin, group_inverse
from .matrix import Mat, block_diag, inverse_over_ring, split_blocks
from .normal_forms import col_module_equal


@dataclass(frozen=True)
class SimilarityWitness:
    W: Mat
    Winv: Mat
    r1: int
    H1: Mat
    H2: Mat
    Acore: Mat
    AcoreInv: Mat


@dataclass(frozen=True)
class HypothesisReport:
    aba_equals_aca: bool
    ab_group_invertible: bool
    ca_group_invertible: bool
    variant_conditions: tuple = ()


VARIANTS = ("cor22", "cor23", "thm22", "cor24")

_MODES = ("product", "ginv", "projector", "core")


def _validate_triple(a: Mat, b: Mat, c: Mat):
    for mat in (a, b, c):
        if not mat.is_square():
            raise NotSquare("similarity inputs must be square")
    a._same_ring(b)
    a._same_ring(c)
    if not (a.shape == b.shape == c.shape):
        raise DimensionMismatch("similarity inputs must share one shape")


def check_hypotheses(a: Mat, b: Mat, c: Mat) -> HypothesisReport:
    """Evaluate the base hypotheses without raising."""
    _validate_triple(a, b, c)
    aba = a @ b @ a
    aca = a @ c @ a
    res_x, _ = _group_inverse_attempt(a @ b)
    res_y, _ = _group_inverse_attempt(c @ a)
    return HypothesisReport(
        aba_equals_aca=(aba == aca),
        ab_group_invertible=res_x is not None,
        ca_group_invertible=res_y is not None,
    )


def _instance_dump(a: Mat, b: Mat, c: Mat, stage: str):
    from .io import matrix_to_doc

    return {
        "stage": stage,
        "A": matrix_to_doc(a),
        "B": matrix_to_doc(b),
        "C": matrix_to_doc(c),
    }


def similarity_witness(a: Mat, b: Mat, c: Mat) -> SimilarityWitness:
    """Construct and verify W with A@B == W @ (C@A) @ W^-1."""
    _validate_triple(a, b, c)
    ring = a.ring
    n = a.n
    x = a @ b
    y = c @ a
    aba = x @ a
    aca = a @ y
    if aba != aca:
        raise HypothesisViolated("A@B@A != A@C@A", lhs=aba, rhs=aca)

    res_x, fail_x = _group_inverse_attempt(x)
    if fail_x is not None:
        fail_x.side = "AB"
        raise fail_x
    res_y, fail_y = _group_inverse_attempt(y)
    if fail_y is not None:
        fail_y.side = "CA"
        raise fail_y
    xg, yg = res_x.ginv, res_y.ginv

    cs1 = _core_split_with(x, xg)
    cs2 = _core_split_with(y, yg)
    if cs1.r != cs2.r:
        raise InternalAssertion(
            "similar products reported different core ranks",
            instance=_instance_dump(a, b, c, "core-rank"),
        )
    r1 = cs1.r
    h1, h2 = cs1.H, cs2.H
    h1inv = inverse_over_ring(h1)
    h2inv = inverse_over_ring(h2)

    at = h1inv @ a @ h2
    at11, at12, at21, _ = split_blocks(at, r1)
    if not (at12.is_zero() and at21.is_zero()):
        raise InternalAssertion(
            "transformed middle factor has nonzero off-diagonal blocks",
            instance=_instance_dump(a, b, c, "block-zeroing"),
        )

    q = y @ yg @ b @ xg
    g = h2inv @ q @ h1
    g11, g12, g21, g22 = split_blocks(g, r1)
    if not (g12.is_zero() and g21.is_zero() and g22.is_zero()):
        raise InternalAssertion(
            "inverse candidate is not supported on the cores",
            instance=_instance_dump(a, b, c, "support"),
        )
    ident_r = Mat.identity(ring, r1)
    if faults.active("witness") or at11 @ g11 != ident_r or g11 @ at11 != ident_r:
        raise InternalAssertion(
            "core block of the middle factor failed to invert",
            instance=_instance_dump(a, b, c, "core-inverse"),
        )

    ident_tail = Mat.identity(ring, n - r1)
    w = h1 @ block_diag(at11, ident_tail) @ h2inv
    winv = h2 @ block_diag(g11, ident_tail) @ h1inv
    if w @ winv != Mat.identity(ring, n) or w @ y @ winv != x:
        raise InternalAssertion(
            "witness failed final verification",
            instance=_instance_dump(a, b, c, "final"),
        )
    return SimilarityWitness(
        W=w, Winv=winv, r1=r1, H1=h1, H2=h2, Acore=at11, AcoreInv=g11
    )


def verify_witness(a: Mat, b: Mat, c: Mat, w: Mat, mode: str = "product") -> bool:
    """Check one conjugation identity for a claimed witness W.

    Modes: product   A@B == W @ (C@A) @ W^-1
           ginv      (A@B)^# == W @ (C@A)^# @ W^-1
           projector (A@B)(A@B)^# == W @ (C@A)(C@A)^# @ W^-1
           core      (A@B)^2 (A@B)^D == W @ (C@A)^2 (C@A)^D @ W^-1

    Verification is independent of the construction pipeline: it does
    not require A@B@A == A@C@A, only whatever inverses the mode itself
    needs.  W must be invertible over the ring.
    """
    _validate_triple(a, b, c)
    if not w.is_square() or w.shape != a.shape:
        raise DimensionMismatch("witness shape does not match the inputs")
    a._same_ring(w)
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {_MODES}")
    winv = inverse_over_ring(w)
    x = a @ b
    y = c @ a
    if mode == "product":
        lhs, rhs = x, y
    elif mode == "ginv":
        lhs = group_inverse(x).ginv
        rhs = group_inverse(y).ginv
    elif mode == "projector":
        lhs = x @ group_inverse(x).ginv
        rhs = y @ group_inverse(y).ginv
    else:  # core
        lhs = x @ x @ drazin(x).dinv
        rhs = y @ y @ drazin(y).dinv
    return lhs == w @ rhs @ winv


def conjugate_witnesses(a: Mat, b: Mat, c: Mat) -> SimilarityWitness:
    """similarity_witness plus verification that the same W transports
    group inverses, core projectors, and cores.  Any failure of the
    derived conjugations is a bug, not an input problem."""
    wit = similarity_witness(a, b, c)
    for mode in ("ginv", "projector", "core"):
        if not verify_witness(a, b, c, wit.W, mode=mode):
            raise InternalAssertion(
                f"constructed witness failed derived conjugation {mode!r}",
                instance=_instance_dump(a, b, c, f"conjugate-{mode}"),
            )
    return wit


def power_witness(a: Mat, b: Mat, c: Mat, s: int) -> SimilarityWitness:
    """Witness conjugating (A@B)^s to (C@A)^s for s at least max(index, 1).

    Reduces to the base construction on the modified triple
    B' = B @ (A@B)^(s-1) and C' = (C@A)^(s-1) @ C, for which
    A @ B' == (A@B)^s and C' @ A == (C@A)^s.  The floor uses the Drazin
    index k of A@B; s == k is attempted and verified rather than
    assumed, so a (C@A)-side failure at s == k surfaces as
    NotGroupInvertible.
    """
    _validate_triple(a, b, c)
    if a @ b @ a != a @ c @ a:
        raise HypothesisViolated(
            "A@B@A != A@C@A", lhs=a @ b @ a, rhs=a @ c @ a
        )
    dr = drazin(a @ b)  # may raise NotDrazinInvertible
    k = dr.index
    floor = max(k, 1)
    if s < floor:
        raise IndexTooSmall(
            f"s={s} is below max(index, 1)={floor}", s=s, index=k
        )
    ab_pow = (a @ b) ** (s - 1)
    ca_pow = (c @ a) ** (s - 1)
    b2 = b @ ab_pow
    c2 = ca_pow @ c
    if a @ b2 != (a @ b) ** s or c2 @ a != (c @ a) ** s:
        raise InternalAssertion(
            "power reduction identities failed",
            instance=_instance_dump(a, b, c, f"power-reduce s={s}"),
        )
    if a @ b2 @ a != a @ c2 @ a:
        raise InternalAssertion(
            "reduced triple lost the shared-product identity",
            instance=_instance_dump(a, b, c, f"power-hypothesis s={s}"),
        )
    res_abs, fail_abs = _group_inverse_attempt(a @ b2)
    if fail_abs is not None:
        # guaranteed for s >= index of A@B; failure means a bug
        raise InternalAssertion(
            "(A@B)^s is not group invertible despite s >= index",
            instance=_instance_dump(a, b, c, f"power-ab s={s}"),
        )
    res_cas, fail_cas = _group_inverse_attempt(c2 @ a)
    if fail_cas is not None:
        # legitimately possible at s == k when index(C@A) == k + 1
        fail_cas.side = "CA^s"
        raise fail_cas
    return similarity_witness(a, b2, c2)


def cline_verify(a: Mat, b: Mat, c: Mat) -> bool:
    """Check the exchange formula for Drazin inverses on a valid triple.

    Computes (C@A)^D independently and compares it with
    C @ [(A@B)^D]^2 @ A, and checks index(C@A) <= index(A@B) + 1.
    Returns the conjunction.
    """
    _validate_triple(a, b, c)
    if a @ b @ a != a @ c @ a:
        raise HypothesisViolated(
            "A@B@A != A@C@A", lhs=a @ b @ a, rhs=a @ c @ a
        )
    dr_ab = drazin(a @ b)  # may raise NotDrazinInvertible
    candidate = c @ (dr_ab.dinv @ dr_ab.dinv) @ a
    try:
        dr_ca = drazin(c @ a)
    except NotDrazinInvertible as exc:
        raise InternalAssertion(
            "C@A lost Drazin invertibility despite the exchange formula",
            instance=_instance_dump(a, b, c, "cline"),
        ) from exc
    return dr_ca.dinv == candidate and dr_ca.index <= dr_ab.index + 1


def _variant_conditions(a: Mat, b: Mat, c: Mat, variant: str):
    ab = a @ b
    ca = c @ a
    if variant == "cor22":
        return (("Rr(A)=Rr(ABA)", col_module_equal(a, ab @ a)),)
    if variant == "cor23":
        return (
            ("Rr(A)=Rr(AB)", col_module_equal(a, ab)),
            ("Rr(B)=Rr(BA)", col_module_equal(b, b @ a)),
        )
    if variant == "thm22":
        return (
            ("Rr(AB)=Rr(ABA)", col_module_equal(ab, ab @ a)),
            ("Rr(CA)=Rr(CAB)", col_module_equal(ca, ca @ b)),
        )
    if variant == "cor24":
        return (
            ("Rr(A)=Rr(AC)", col_module_equal(a, a @ c)),
            ("Rr(A)=Rr(ABA)", col_module_equal(a, ab @ a)),
        )
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def corollary_check(a: Mat, b: Mat, c: Mat, variant: str):
    """Evaluate a sufficient-condition variant, then build the witness.

    Each variant is a set of named column-module equalities which, for a
    triple with A@B@A == A@C@A, force both A@B and C@A to be group
    invertible.  If every equality holds, group invertibility is
    asserted (a failure would contradict the theory, so it raises
    InternalAssertion) and the base witness is returned.  If some
    equality fails, ConditionNotMet carries the failing names and the
    full report.  The cor24 variant checks its stated equalities but,
    like the others, certifies A@B similar to C@A.
    """
    _validate_triple(a, b, c)
    aba = a @ b @ a
    aca = a @ c @ a
    if aba != aca:
        raise HypothesisViolated("A@B@A != A@C@A", lhs=aba, rhs=aca)
    conditions = _variant_conditions(a, b, c, variant)
    res_x, _ = _group_inverse_attempt(a @ b)
    res_y, _ = _group_inverse_attempt(c @ a)
    report = HypothesisReport(
        aba_equals_aca=True,
        ab_group_invertible=res_x is not None,
        ca_group_invertible=res_y is not None,
        variant_conditions=conditions,
    )
    failed = tuple(name for name, ok in conditions if not ok)
    if failed:
        raise ConditionNotMet(
            "variant conditions failed: " + ", ".join(failed),
            failed=failed,
            report=report,
        )
    if res_x is None or res_y is None:
        raise InternalAssertion(
            "variant conditions hold but a product is not group invertible",
            instance=_instance_dump(a, b, c, f"variant-{variant}"),
        )
    wit = similarity_witness(a, b, c)
    return report, wit
