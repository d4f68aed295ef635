"""Finite-dimensional Hom-algebras given by structure constants.

A Hom-algebra is a vector space with a bilinear product ``mul`` and a linear
twisting map ``alpha``.  Both are stored sparsely over exact scalars:

* ``mu[(i, j)]`` lists the nonzero coordinates of ``e_i * e_j`` as
  ``(k, coeff)`` pairs;
* ``alpha[i]`` lists the nonzero coordinates of ``alpha(e_i)``;

pairs and rows with no nonzero coordinates are simply absent.  Coefficients
may involve the named parameters in ``params`` (for symbolically
parametrized families), and elements may have polynomial coordinates, which
is how generic (indeterminate-coordinate) elements are represented.

The Hom-associator is ``(x, y, z) = (xy) alpha(z) - alpha(x) (yz)``; an
algebra is right Hom-alternative when ``(x, y, y) = 0`` and left
Hom-alternative when ``(x, x, y) = 0``.  Hom-powers follow
``x^n = x^(n-1) * alpha^(n-2)(x)``.  Structural checks below scan all basis
tuples of the (multi)linearized forms, which is complete over a field of
characteristic zero; they report the first failing tuple in lexicographic
order along with the nonzero element witnessing the failure.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .scalars import (
    Poly,
    Rational,
    Scalar,
    encode_scalar,
    normalize,
    scalar_str,
    substitute,
    degree as scalar_degree,
)

SparseRow = tuple[tuple[int, Scalar], ...]
MuTable = dict[tuple[int, int], SparseRow]
RowTable = dict[int, SparseRow]
RowsLike = Union[Mapping[int, Iterable[tuple[int, Scalar]]], Sequence[Sequence[Scalar]]]

HOLDS = "holds"
FAILS = "fails"
RANDOM_PASS = "random-pass"


@dataclass(frozen=True)
class Element:
    """Vector with exact scalar coordinates, written in a fixed basis."""

    coords: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(normalize(c) for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c != 0)

    def __add__(self, other: "Element") -> "Element":
        _same_dim(self, other)
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        _same_dim(self, other)
        return Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(tuple(-c for c in self.coords))

    def scale(self, s: Scalar) -> "Element":
        return Element(tuple(s * c for c in self.coords))

    def substitute(self, assignment: Mapping[str, Rational]) -> "Element":
        return Element(tuple(substitute(c, assignment) for c in self.coords))

    def __str__(self) -> str:
        return element_str(self)


def _same_dim(a: Element, b: Element) -> None:
    if len(a.coords) != len(b.coords):
        raise ValueError(f"dimension mismatch: {len(a.coords)} vs {len(b.coords)}")


def element_str(x: Element, names: Sequence[str] | None = None) -> str:
    """Render ``e7 - e8`` style text, parenthesizing polynomial coefficients."""
    pieces: list[str] = []
    for i, c in enumerate(x.coords):
        if c == 0:
            continue
        name = names[i] if names is not None else f"e{i + 1}"
        neg, body = _coeff_parts(c)
        text = name if body is None else f"{body}*{name}"
        if not pieces:
            pieces.append(f"-{text}" if neg else text)
        else:
            pieces.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(pieces) if pieces else "0"


def _coeff_parts(c: Scalar) -> tuple[bool, str | None]:
    """Split a coefficient into (negative?, printable body or None for 1)."""
    if isinstance(c, Poly):
        if len(c.terms) == 1:
            ((m, coeff),) = c.terms.items()
            neg, body = _coeff_parts(coeff)
            head = scalar_str(Poly({m: 1}))
            return neg, head if body is None else f"{body}*{head}"
        return False, f"({scalar_str(c)})"
    neg = c < 0
    mag = -c if neg else c
    return neg, None if mag == 1 else scalar_str(mag)


def _norm_sparse_row(dim: int, row: Iterable[tuple[int, Scalar]], what: str) -> SparseRow:
    acc: dict[int, Scalar] = {}
    for k, c in row:
        if not 0 <= k < dim:
            raise ValueError(f"{what}: index {k} out of range for dimension {dim}")
        acc[k] = acc.get(k, 0) + c
    return tuple((k, normalize(c)) for k, c in sorted(acc.items()) if c != 0)


def normalize_rows(dim: int, rows: RowsLike, what: str = "linear map") -> RowTable:
    """Canonical sparse row table from either sparse rows or a dense matrix."""
    out: RowTable = {}
    if isinstance(rows, Mapping):
        items = rows.items()
    else:
        if len(rows) != dim:
            raise ValueError(f"{what}: expected {dim} rows, got {len(rows)}")
        items = ((i, [(k, c) for k, c in enumerate(r)]) for i, r in enumerate(rows))
    for i, row in items:
        if not 0 <= i < dim:
            raise ValueError(f"{what}: row index {i} out of range for dimension {dim}")
        packed = _norm_sparse_row(dim, row, what)
        if packed:
            out[i] = packed
    return out


def apply_rows(rows: RowTable, x: Element) -> Element:
    """Apply a linear map given as sparse rows: row i holds the image of e_i."""
    acc: list[Scalar] = [0] * len(x.coords)
    for i, row in rows.items():
        xi = x.coords[i]
        if xi == 0:
            continue
        for k, c in row:
            acc[k] = acc[k] + xi * c
    return Element(tuple(acc))


def compose_rows(dim: int, first: RowTable, then: RowTable) -> RowTable:
    """Row table of ``x -> then(first(x))``."""
    out: dict[int, dict[int, Scalar]] = {}
    for i, row in first.items():
        acc: dict[int, Scalar] = {}
        for k, c in row:
            for j, d in then.get(k, ()):
                acc[j] = acc.get(j, 0) + c * d
        if acc:
            out[i] = acc
    return normalize_rows(dim, {i: tuple(r.items()) for i, r in out.items()})


def substitute_rows(rows: RowTable, assignment: Mapping[str, Rational]) -> RowTable:
    out: RowTable = {}
    for i, row in rows.items():
        packed = tuple((k, substitute(c, assignment)) for k, c in row)
        packed = tuple((k, c) for k, c in packed if c != 0)
        if packed:
            out[i] = packed
    return out


def identity_rows(dim: int) -> RowTable:
    return {i: ((i, 1),) for i in range(dim)}


@dataclass
class HomAlgebra:
    """Hom-algebra with sparse structure constants and twisting map.

    Instances are treated as immutable; every operation returns fresh
    elements or fresh algebras, so concurrent sweeps over one algebra are
    safe.
    """

    dim: int
    mu: MuTable
    alpha: RowTable
    params: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        mu: MuTable = {}
        for (i, j), row in self.mu.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"product ({i},{j}): index out of range for dimension {self.dim}")
            packed = _norm_sparse_row(self.dim, row, f"product ({i},{j})")
            if packed:
                mu[(i, j)] = packed
        self.mu = mu
        self.alpha = normalize_rows(self.dim, self.alpha, "twisting map")
        self.params = tuple(self.params)
        if len(set(self.params)) != len(self.params):
            raise ValueError("duplicate parameter names")

    # -- element constructors ----------------------------------------------

    def zero(self) -> Element:
        return Element((0,) * self.dim)

    def basis_element(self, i: int) -> Element:
        if not 0 <= i < self.dim:
            raise ValueError(f"basis index {i} out of range for dimension {self.dim}")
        return Element(tuple(1 if k == i else 0 for k in range(self.dim)))

    def element(self, coords: Iterable[Scalar]) -> Element:
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"dimension mismatch: expected {self.dim} coordinates, got {len(coords)}")
        return Element(coords)

    def basis(self) -> list[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    # -- core operations ----------------------------------------------------

    def mul(self, x: Element, y: Element) -> Element:
        if x.dim != self.dim or y.dim != self.dim:
            raise ValueError("dimension mismatch between element and algebra")
        acc: list[Scalar] = [0] * self.dim
        xs, ys = x.coords, y.coords
        for (i, j), row in self.mu.items():
            xi = xs[i]
            if xi == 0:
                continue
            yj = ys[j]
            if yj == 0:
                continue
            base = xi * yj
            for k, c in row:
                acc[k] = acc[k] + base * c
        return Element(tuple(acc))

    def twist_apply(self, x: Element) -> Element:
        if x.dim != self.dim:
            raise ValueError("dimension mismatch between element and algebra")
        return apply_rows(self.alpha, x)

    def shift(self, x: Element, n: int) -> Element:
        """n-fold application of the twisting map (n >= 0)."""
        if n < 0:
            raise ValueError("twist exponent must be nonnegative")
        for _ in range(n):
            x = self.twist_apply(x)
        return x

    def hom_associator(self, x: Element, y: Element, z: Element) -> Element:
        return self.mul(self.mul(x, y), self.twist_apply(z)) - self.mul(
            self.twist_apply(x), self.mul(y, z)
        )

    def commutator(self, x: Element, y: Element) -> Element:
        return self.mul(x, y) - self.mul(y, x)

    def hom_power(self, x: Element, n: int) -> Element:
        if n < 1:
            raise ValueError("Hom-power exponent must be at least 1")
        power = x
        for m in range(2, n + 1):
            if power.is_zero():
                return self.zero()
            power = self.mul(power, self.shift(x, m - 2))
        return power

    def with_params(self, extra: Iterable[str]) -> "HomAlgebra":
        return dataclasses.replace(self, params=self.params + tuple(extra))

    def twist_entry_degree(self) -> int:
        """Largest parameter degree among stored product/twist coefficients."""
        best = 0
        for row in self.mu.values():
            for _, c in row:
                best = max(best, scalar_degree(c))
        for row in self.alpha.values():
            for _, c in row:
                best = max(best, scalar_degree(c))
        return best


# -- reports ----------------------------------------------------------------


@dataclass
class Witness:
    """Replayable evidence for a failing check.

    Exactly one of ``basis`` (a tuple of basis indices) or ``point`` (an
    assignment of rationals to variable names) locates the failure; for
    operator identities ``probe`` is the basis index whose image row differs,
    and for multi-equation entries ``pair_index`` selects the equation.
    ``element`` is the nonzero difference observed there.
    """

    element: Element
    basis: tuple[int, ...] | None = None
    point: dict[str, Rational] | None = None
    probe: int | None = None
    pair_index: int | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "element": [
                {"index": i, "coeff": encode_scalar(c)}
                for i, c in enumerate(self.element.coords)
                if c != 0
            ]
        }
        if self.basis is not None:
            out["basis"] = list(self.basis)
        if self.point is not None:
            out["point"] = {k: str(Fraction(v)) for k, v in sorted(self.point.items())}
        if self.probe is not None:
            out["probe"] = self.probe
        if self.pair_index is not None:
            out["pair_index"] = self.pair_index
        return out


@dataclass
class CheckReport:
    """Outcome of one verification.

    ``holds`` and ``fails`` are exact statements about the strategy's
    coverage (all basis tuples, fully generic coordinates, or every small
    support pattern); ``random-pass`` records agreement at sampled integer
    points together with the sample size, seed, and a total-degree bound on
    the compared polynomials.
    """

    check: str
    status: str
    strategy: str
    points: int | None = None
    seed: int | None = None
    degree_bound: int | None = None
    witness: Witness | None = None

    def passed(self) -> bool:
        return self.status in (HOLDS, RANDOM_PASS)

    def to_dict(self) -> dict:
        out: dict = {
            "id": self.check,
            "status": self.status,
            "strategy": self.strategy,
            "points": self.points,
            "seed": self.seed,
            "degree_bound": self.degree_bound,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


# -- structural checks -------------------------------------------------------


def is_multiplicative(A: HomAlgebra) -> CheckReport:
    """Does the twisting map preserve products on all basis pairs?"""
    basis = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            diff = A.twist_apply(A.mul(basis[i], basis[j])) - A.mul(
                A.twist_apply(basis[i]), A.twist_apply(basis[j])
            )
            if not diff.is_zero():
                return CheckReport(
                    "multiplicative", FAILS, "basis",
                    witness=Witness(element=diff, basis=(i, j)),
                )
    return CheckReport("multiplicative", HOLDS, "basis")


def _alternativity_witness(A: HomAlgebra, triple: tuple[int, int, int], side: str) -> Element:
    """Recompute the element reported for a failing (left/right) triple."""
    i, j, k = triple
    basis = A.basis()
    if side == "right":
        if j == k:
            return A.hom_associator(basis[i], basis[j], basis[j])
        return A.hom_associator(basis[i], basis[j], basis[k]) + A.hom_associator(
            basis[i], basis[k], basis[j]
        )
    if i == j:
        return A.hom_associator(basis[i], basis[i], basis[k])
    return A.hom_associator(basis[i], basis[j], basis[k]) + A.hom_associator(
        basis[j], basis[i], basis[k]
    )


def _alternativity_check(A: HomAlgebra, side: str, check_id: str) -> CheckReport:
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                value = _alternativity_witness(A, (i, j, k), side)
                if not value.is_zero():
                    return CheckReport(
                        check_id, FAILS, "basis",
                        witness=Witness(element=value, basis=(i, j, k)),
                    )
    return CheckReport(check_id, HOLDS, "basis")


def is_right_hom_alternative(A: HomAlgebra) -> CheckReport:
    """Check ``(x, y, y) = 0`` via its linearization on all basis triples.

    Over characteristic zero the linearized form ``(x,y,z) + (x,z,y)``
    vanishing on every basis triple is equivalent to the quadratic identity;
    for a failing triple with repeated last slots the plain Hom-associator is
    reported, otherwise the linearized sum.
    """
    return _alternativity_check(A, "right", "right-alt")


def is_left_hom_alternative(A: HomAlgebra) -> CheckReport:
    """Check ``(x, x, y) = 0`` via its linearization on all basis triples."""
    return _alternativity_check(A, "left", "left-alt")


def is_weak_morphism(A: HomAlgebra, B: HomAlgebra, f: RowsLike) -> CheckReport:
    """Does ``f`` carry products of A to products of B on all basis pairs?"""
    if A.dim != B.dim:
        raise ValueError("dimension mismatch between algebras")
    rows = normalize_rows(A.dim, f)
    basis = A.basis()
    images = [apply_rows(rows, e) for e in basis]
    for i in range(A.dim):
        for j in range(A.dim):
            diff = apply_rows(rows, A.mul(basis[i], basis[j])) - B.mul(images[i], images[j])
            if not diff.is_zero():
                return CheckReport(
                    "weak-morphism", FAILS, "basis",
                    witness=Witness(element=diff, basis=(i, j)),
                )
    return CheckReport("weak-morphism", HOLDS, "basis")


def is_morphism(A: HomAlgebra, B: HomAlgebra, f: RowsLike) -> CheckReport:
    """Weak morphism that also intertwines the twisting maps."""
    report = is_weak_morphism(A, B, f)
    if report.status == FAILS:
        return CheckReport("morphism", FAILS, "basis", witness=report.witness)
    rows = normalize_rows(A.dim, f)
    for i in range(A.dim):
        e = A.basis_element(i)
        diff = apply_rows(rows, A.twist_apply(e)) - B.twist_apply(apply_rows(rows, e))
        if not diff.is_zero():
            return CheckReport(
                "morphism", FAILS, "basis",
                witness=Witness(element=diff, basis=(i,)),
            )
    return CheckReport("morphism", HOLDS, "basis")


def replay_structural_witness(
    A: HomAlgebra,
    report: CheckReport,
    B: HomAlgebra | None = None,
    f: RowsLike | None = None,
) -> Element:
    """Recompute the element a failing structural report points at."""
    if report.witness is None or report.witness.basis is None:
        raise ValueError("report carries no basis witness")
    tup = report.witness.basis
    if report.check == "multiplicative":
        i, j = tup
        ei, ej = A.basis_element(i), A.basis_element(j)
        return A.twist_apply(A.mul(ei, ej)) - A.mul(A.twist_apply(ei), A.twist_apply(ej))
    if report.check in ("right-alt", "left-alt"):
        side = "right" if report.check == "right-alt" else "left"
        return _alternativity_witness(A, tup, side)
    if report.check in ("weak-morphism", "morphism"):
        if f is None:
            raise ValueError("replaying a morphism report needs the map")
        other = B if B is not None else A
        rows = normalize_rows(A.dim, f)
        if len(tup) == 1:
            e = A.basis_element(tup[0])
            return apply_rows(rows, A.twist_apply(e)) - other.twist_apply(apply_rows(rows, e))
        i, j = tup
        ei, ej = A.basis_element(i), A.basis_element(j)
        return apply_rows(rows, A.mul(ei, ej)) - other.mul(
            apply_rows(rows, ei), apply_rows(rows, ej)
        )
    raise ValueError(f"unknown structural check {report.check!r}")


# -- constructions ------------------------------------------------------------


def yau_twist(A: HomAlgebra, beta: RowsLike, check: bool = True) -> HomAlgebra:
    """Twist of A by a weak morphism: product ``beta(xy)``, twist ``beta . alpha``.

    By default the weak-morphism property of ``beta`` is verified first and a
    ValueError is raised when it does not hold.
    """
    rows = normalize_rows(A.dim, beta)
    if check:
        report = is_weak_morphism(A, A, rows)
        if not report.passed():
            pair = report.witness.basis if report.witness else None
            raise ValueError(f"twisting map is not a weak morphism (first failing pair {pair})")
    new_mu: MuTable = {}
    for (i, j), row in A.mu.items():
        acc: dict[int, Scalar] = {}
        for k, c in row:
            for t, d in rows.get(k, ()):
                acc[t] = acc.get(t, 0) + c * d
        packed = tuple((t, v) for t, v in sorted(acc.items()) if v != 0)
        if packed:
            new_mu[(i, j)] = packed
    new_alpha = compose_rows(A.dim, A.alpha, rows)
    return HomAlgebra(A.dim, new_mu, new_alpha, A.params)


def generic_element(A: HomAlgebra, prefix: str) -> tuple[HomAlgebra, Element]:
    """Adjoin fresh indeterminates ``prefix_1 .. prefix_dim`` and return the
    element with those coordinates, together with the extended algebra."""
    if not prefix.isidentifier():
        raise ValueError(f"prefix {prefix!r} is not an identifier")
    names = [f"{prefix}_{i}" for i in range(1, A.dim + 1)]
    clash = set(names) & set(A.params)
    if clash:
        raise ValueError(f"name collision with existing parameters: {sorted(clash)}")
    extended = A.with_params(names)
    coords = tuple(Poly.variable(n) for n in names)
    return extended, Element(coords)


def substitute_params(A: HomAlgebra, assignment: Mapping[str, Rational]) -> HomAlgebra:
    """Instantiate named parameters with rational values."""
    unknown = set(assignment) - set(A.params)
    if unknown:
        raise ValueError(f"unknown parameters: {sorted(unknown)}")
    mu: MuTable = {}
    for key, row in A.mu.items():
        packed = tuple((k, substitute(c, assignment)) for k, c in row)
        packed = tuple((k, c) for k, c in packed if c != 0)
        if packed:
            mu[key] = packed
    alpha = substitute_rows(A.alpha, assignment)
    params = tuple(p for p in A.params if p not in assignment)
    return HomAlgebra(A.dim, mu, alpha, params)


# -- pointwise utilities -------------------------------------------------------


def is_hom_nilpotent(A: HomAlgebra, x: Element, nmax: int) -> int | None:
    """Least ``2 <= n <= nmax`` with ``x^n = 0`` for nonzero x, else None."""
    if nmax < 2:
        raise ValueError("nmax must be at least 2")
    if x.is_zero():
        return None
    power = x
    for n in range(2, nmax + 1):
        power = A.mul(power, A.shift(x, n - 2))
        if power.is_zero():
            return n
    return None


def basis_left_zero_divisors(A: HomAlgebra) -> list[int]:
    """Basis indices i with ``e_i e_j = 0`` for at least one basis j.

    Sound witnesses for left zero-divisors among basis elements; the scan
    only considers basis pairs, so it is not a complete zero-divisor test.
    """
    out = []
    for i in range(A.dim):
        if any((i, j) not in A.mu for j in range(A.dim)):
            out.append(i)
    return out
