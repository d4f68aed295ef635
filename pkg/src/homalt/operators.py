"""Right-operator calculus for Hom-algebras.

Operators act on the *right* of elements and compositions read left to
right: ``apply(x, compose(M, N)) == apply(apply(x, M), N)``.  Concretely an
operator is a sparse matrix whose row ``i`` holds the image of the basis
element ``e_i``, so application is a row-vector/matrix product and
``compose(M, N)`` is the ordinary matrix product ``M @ N``.  Getting this
orientation wrong silently transposes every identity below, so the tests pin
it down explicitly.

The derived operators are the two bracketed right multiplications

    x . sup(a, b)  =  alpha(x) (ab) - (xa) alpha(b)   (= -(x, a, b))
    x . sub(a, b)  =  alpha(x) (ab) - (xb) alpha(a)

written ``a^b`` and ``a_b`` in superscript/subscript notation, together with
plain right multiplication ``a'`` and powers of the twisting map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homalgebra import Element, HomAlgebra, RowTable, apply_rows, compose_rows, normalize_rows
from .scalars import Scalar


@dataclass
class RightOp:
    """Linear operator acting on the right, stored as sparse rows."""

    dim: int
    rows: RowTable

    def __post_init__(self) -> None:
        self.rows = normalize_rows(self.dim, self.rows, "operator")

    def is_zero(self) -> bool:
        return not self.rows

    def entry(self, i: int, j: int) -> Scalar:
        for k, c in self.rows.get(i, ()):
            if k == j:
                return c
        return 0

    def __add__(self, other: "RightOp") -> "RightOp":
        _same_dim(self, other)
        acc: dict[int, dict[int, Scalar]] = {i: dict(r) for i, r in self.rows.items()}
        for i, row in other.rows.items():
            dest = acc.setdefault(i, {})
            for k, c in row:
                dest[k] = dest.get(k, 0) + c
        return RightOp(self.dim, {i: tuple(r.items()) for i, r in acc.items()})

    def __neg__(self) -> "RightOp":
        return RightOp(
            self.dim, {i: tuple((k, -c) for k, c in row) for i, row in self.rows.items()}
        )

    def __sub__(self, other: "RightOp") -> "RightOp":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RightOp):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows


def _same_dim(a: RightOp, b: RightOp) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def zero_op(dim: int) -> RightOp:
    return RightOp(dim, {})


def identity_op(dim: int) -> RightOp:
    return RightOp(dim, {i: ((i, 1),) for i in range(dim)})


def apply(x: Element, op: RightOp) -> Element:
    """Right action: the image of x under op."""
    if x.dim != op.dim:
        raise ValueError("dimension mismatch between element and operator")
    return apply_rows(op.rows, x)


def compose(*ops: RightOp) -> RightOp:
    """Left-to-right composition: the first operator is applied first."""
    if not ops:
        raise ValueError("compose needs at least one operator")
    result = ops[0]
    for op in ops[1:]:
        _same_dim(result, op)
        result = RightOp(result.dim, compose_rows(result.dim, result.rows, op.rows))
    return result


def op_sum(*ops: RightOp) -> RightOp:
    result = ops[0]
    for op in ops[1:]:
        result = result + op
    return result


def right_mul_op(A: HomAlgebra, a: Element) -> RightOp:
    """Right multiplication ``x -> xa`` as a matrix."""
    if a.dim != A.dim:
        raise ValueError("dimension mismatch between element and algebra")
    acc: dict[int, dict[int, Scalar]] = {}
    for (i, j), row in A.mu.items():
        aj = a.coords[j]
        if aj == 0:
            continue
        dest = acc.setdefault(i, {})
        for k, c in row:
            dest[k] = dest.get(k, 0) + c * aj
    return RightOp(A.dim, {i: tuple(r.items()) for i, r in acc.items()})


def alpha_op(A: HomAlgebra, n: int) -> RightOp:
    """The n-th power of the twisting map as a right operator (n >= 0)."""
    if n < 0:
        raise ValueError("twist exponent must be nonnegative")
    result = identity_op(A.dim)
    twist = RightOp(A.dim, A.alpha)
    for _ in range(n):
        result = compose(result, twist)
    return result


def op_sup(A: HomAlgebra, a: Element, b: Element) -> RightOp:
    """Superscript operator ``a^b``: sends x to ``-(x, a, b)``."""
    ab = right_mul_op(A, A.mul(a, b))
    return compose(alpha_op(A, 1), ab) - compose(
        right_mul_op(A, a), right_mul_op(A, A.twist_apply(b))
    )


def op_sub(A: HomAlgebra, a: Element, b: Element) -> RightOp:
    """Subscript operator ``a_b``: sends x to ``alpha(x)(ab) - (xb) alpha(a)``."""
    ab = right_mul_op(A, A.mul(a, b))
    return compose(alpha_op(A, 1), ab) - compose(
        right_mul_op(A, b), right_mul_op(A, A.twist_apply(a))
    )
