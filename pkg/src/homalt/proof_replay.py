"""Identity registry and verification strategies.

Each registry entry pins down one identity of the right Hom-alternative
calculus, from the defining alternativity law up to the twisted Mikheev
identity ``alpha^6((a,a,b)^4) = 0`` and its untwisted corollary.  Entries
carry the preconditions an algebra must satisfy for the identity to be a
theorem (multiplicativity and/or right Hom-alternativity, checked on basis
tuples before verification; violations raise :class:`PreconditionError`
rather than producing a meaningless failure).

Three strategies are offered:

* ``generic``  -- evaluate with fully indeterminate coordinates; complete.
* ``subset``   -- fully generic coordinates restricted to every support
  tuple of size at most ``subset_max`` per argument slot; complete for
  elements of small support.
* ``random``   -- exact evaluation at uniformly drawn integer points in
  [-10^6, 10^6] (parameters of symbolic algebras are drawn too); a pass is
  reported as ``random-pass`` with the seed, point count, and a conservative
  total-degree bound in the drawn variables.

Failing reports carry a replayable witness: a rational point (and for
operator identities a probe basis index) at which the two sides differ,
together with the nonzero difference element.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .homalgebra import (
    FAILS,
    HOLDS,
    RANDOM_PASS,
    CheckReport,
    Element,
    HomAlgebra,
    RowTable,
    RowsLike,
    Witness,
    apply_rows,
    generic_element,
    is_multiplicative,
    is_right_hom_alternative,
    is_weak_morphism,
    normalize_rows,
    substitute_params,
    substitute_rows,
    yau_twist,
)
from .operators import RightOp, alpha_op, compose, op_sup, op_sub, right_mul_op, zero_op
from .scalars import Poly, Rational

Side = Union[Element, RightOp]
Evaluator = Callable[[HomAlgebra, Sequence[Element], RowTable], list[tuple[Side, Side]]]

RANDOM_BOUND = 10**6


class PreconditionError(Exception):
    """An identity was requested on an algebra outside its hypothesis class."""

    def __init__(self, tag: str, requirement: str, report: CheckReport):
        self.tag = tag
        self.requirement = requirement
        self.report = report
        super().__init__(f"precondition for {tag!r} not satisfied: algebra is not {requirement}")


@dataclass(frozen=True)
class IdentityInstance:
    """One verifiable identity.

    ``evaluate`` returns equation pairs (usually one; the shift-indexed
    entries return one pair per shift).  ``elem_degree`` is the total degree
    in element coordinates and ``map_weight`` a conservative count of
    product/twist applications, used for random-strategy degree bounds.
    """

    tag: str
    label: str
    arity: int
    kind: str  # "element" | "operator"
    var_names: tuple[str, ...]
    needs_multiplicative: bool
    needs_right_alternative: bool
    elem_degree: int
    map_weight: int
    evaluate: Evaluator

    def degree_bound(self, A: HomAlgebra) -> int:
        return self.elem_degree + self.map_weight * A.twist_entry_degree()


def _assoc_p(A: HomAlgebra, a: Element, b: Element) -> Element:
    return A.hom_associator(a, a, b)


# -- element-identity evaluators ----------------------------------------------

def _ev_xyy(A, xs, beta):
    x, y = xs
    lhs = A.mul(A.mul(x, y), A.twist_apply(y))
    rhs = A.mul(A.twist_apply(x), A.mul(y, y))
    return [(lhs, rhs)]

def _ev_linearized(A, xs, beta):
    x, y, z = xs
    return [(A.hom_associator(x, y, z), -A.hom_associator(x, z, y))]

def _ev_teichmuller(A, xs, beta):
    w, x, y, z = xs
    aw, ax, ay, az = (A.twist_apply(v) for v in xs)
    total = (
        A.hom_associator(A.mul(w, x), ay, az)
        - A.hom_associator(aw, A.mul(x, y), az)
        + A.hom_associator(aw, ax, A.mul(y, z))
        - A.mul(A.shift(w, 2), A.hom_associator(x, y, z))
        - A.mul(A.hom_associator(w, x, y), A.shift(z, 2))
    )
    return [(total, A.zero())]

def _ev_xyyz(A, xs, beta):
    x, y, z = xs
    lhs = A.hom_associator(A.twist_apply(x), A.twist_apply(y), A.mul(y, z))
    rhs = A.mul(A.hom_associator(x, y, z), A.shift(y, 2))
    return [(lhs, rhs)]

def _ev_moufang(A, xs, beta):
    x, y, z = xs
    lhs = A.mul(A.mul(A.mul(x, y), A.twist_apply(z)), A.shift(y, 2))
    rhs = A.mul(A.shift(x, 2), A.mul(A.mul(y, z), A.twist_apply(y)))
    return [(lhs, rhs)]

def _ev_beta2(A, xs, beta):
    x, y, z = xs
    twisted = yau_twist(A, beta, check=False)
    inner = A.hom_associator(x, y, z)
    lhs = apply_rows(beta, apply_rows(beta, inner))
    rhs = twisted.hom_associator(x, y, z)
    return [(lhs, rhs)]

def _ev_eq8(A, xs, beta):
    a, b = xs
    p3 = A.shift(_assoc_p(A, a, b), 3)
    inner = A.hom_associator(
        A.commutator(A.shift(a, 2), A.shift(b, 2)), A.shift(a, 3), A.shift(b, 3)
    )
    return [(A.mul(p3, inner), A.zero())]

def _ev_eq9(A, xs, beta):
    a, b = xs
    p4 = A.shift(_assoc_p(A, a, b), 4)
    inner = A.hom_associator(
        A.mul(A.commutator(A.shift(a, 2), A.shift(b, 2)), A.shift(a, 3)),
        A.shift(a, 4),
        A.shift(b, 4),
    )
    return [(A.mul(p4, inner), A.zero())]

def _ev_theorem(A, xs, beta):
    a, b = xs
    return [(A.shift(A.hom_power(_assoc_p(A, a, b), 4), 6), A.zero())]

def _ev_classical(A, xs, beta):
    a, b = xs
    return [(A.hom_power(_assoc_p(A, a, b), 4), A.zero())]


# -- operator-identity evaluators -----------------------------------------------

def _ev_eq1(A, xs, beta):
    (a,) = xs
    lhs = compose(right_mul_op(A, a), right_mul_op(A, A.twist_apply(a)))
    rhs = compose(alpha_op(A, 1), right_mul_op(A, A.mul(a, a)))
    return [(lhs, rhs)]

def _ev_eq2(A, xs, beta):
    a, b = xs
    lhs = compose(
        right_mul_op(A, a),
        right_mul_op(A, A.twist_apply(b)),
        right_mul_op(A, A.shift(a, 2)),
    )
    rhs = compose(
        alpha_op(A, 2), right_mul_op(A, A.mul(A.mul(a, b), A.twist_apply(a)))
    )
    return [(lhs, rhs)]

def _ev_eq2p(A, xs, beta):
    a, b, c = xs
    lhs = compose(
        right_mul_op(A, a), right_mul_op(A, A.twist_apply(b)), right_mul_op(A, A.shift(c, 2))
    ) + compose(
        right_mul_op(A, c), right_mul_op(A, A.twist_apply(b)), right_mul_op(A, A.shift(a, 2))
    )
    inner = A.mul(A.mul(a, b), A.twist_apply(c)) + A.mul(A.mul(c, b), A.twist_apply(a))
    rhs = compose(alpha_op(A, 2), right_mul_op(A, inner))
    return [(lhs, rhs)]

def _ev_eq3a(A, xs, beta):
    (a,) = xs
    return [(op_sup(A, a, a), zero_op(A.dim))]

def _ev_eq3b(A, xs, beta):
    a, b = xs
    return [(op_sup(A, a, b) + op_sup(A, b, a), zero_op(A.dim))]

def _ev_eq5(A, xs, beta):
    a, b = xs
    lhs = compose(op_sup(A, a, b), op_sub(A, A.shift(a, 2), A.shift(b, 2)))
    return [(lhs, zero_op(A.dim))]

def _ev_eq5p(A, xs, beta):
    a, b, c = xs
    lhs = compose(op_sup(A, a, b), op_sub(A, A.shift(a, 2), A.shift(c, 2))) + compose(
        op_sup(A, a, c), op_sub(A, A.shift(a, 2), A.shift(b, 2))
    )
    return [(lhs, zero_op(A.dim))]

def _ev_eq6(A, xs, beta):
    a, b = xs
    lhs = compose(op_sub(A, a, b), op_sup(A, A.shift(a, 2), A.shift(b, 2)))
    inner = A.hom_associator(A.commutator(a, b), A.twist_apply(a), A.twist_apply(b))
    rhs = -compose(alpha_op(A, 3), right_mul_op(A, inner))
    return [(lhs, rhs)]

def _ev_eq7(A, xs, beta):
    a, b = xs
    lhs = compose(
        op_sub(A, a, b),
        right_mul_op(A, A.shift(a, 2)),
        op_sup(A, A.shift(a, 3), A.shift(b, 3)),
    )
    inner = A.hom_associator(
        A.mul(A.commutator(a, b), A.twist_apply(a)), A.shift(a, 2), A.shift(b, 2)
    )
    rhs = -compose(alpha_op(A, 4), right_mul_op(A, inner))
    return [(lhs, rhs)]

def _ev_eq10(A, xs, beta):
    a, b = xs
    p = _assoc_p(A, a, b)
    ba = A.mul(b, a)
    pairs = []
    for k in range(3):
        lhs = compose(alpha_op(A, 2), right_mul_op(A, A.shift(p, k)))
        rhs = compose(
            alpha_op(A, 1), op_sup(A, A.shift(a, k + 1), A.shift(ba, k))
        ) - compose(
            right_mul_op(A, A.shift(a, k)),
            op_sup(A, A.shift(a, k + 1), A.shift(b, k + 1)),
        )
        pairs.append((lhs, rhs))
    return pairs

def _ev_eq10p(A, xs, beta):
    a, b = xs
    p = _assoc_p(A, a, b)
    ba = A.mul(b, a)
    pairs = []
    for k in range(3):
        lhs = compose(alpha_op(A, 2), right_mul_op(A, A.shift(p, k)))
        rhs = compose(
            alpha_op(A, 1), op_sub(A, A.shift(a, k + 1), A.shift(ba, k))
        ) - compose(
            op_sub(A, A.shift(a, k), A.shift(b, k)),
            right_mul_op(A, A.shift(a, k + 2)),
        )
        pairs.append((lhs, rhs))
    return pairs


def _mikheev_chain(A: HomAlgebra, a: Element, b: Element) -> RightOp:
    """The product ``a^b p' p_1' p_2' alpha^6`` with ``p = (a, a, b)``."""
    p = _assoc_p(A, a, b)
    return compose(
        op_sup(A, a, b),
        right_mul_op(A, p),
        right_mul_op(A, A.shift(p, 1)),
        right_mul_op(A, A.shift(p, 2)),
        alpha_op(A, 6),
    )

def _d_term(A: HomAlgebra, a: Element, b: Element) -> RightOp:
    ba = A.mul(b, a)
    return -compose(
        op_sup(A, a, b),
        alpha_op(A, 1),
        op_sub(A, A.shift(a, 3), A.shift(ba, 2)),
        alpha_op(A, 1),
        op_sup(A, A.shift(a, 6), A.shift(ba, 5)),
        op_sub(A, A.shift(a, 8), A.shift(b, 8)),
        right_mul_op(A, A.shift(a, 10)),
    )

def _e_term(A: HomAlgebra, a: Element, b: Element) -> RightOp:
    ba = A.mul(b, a)
    return -compose(
        op_sup(A, a, b),
        alpha_op(A, 1),
        op_sub(A, A.shift(a, 3), A.shift(ba, 2)),
        right_mul_op(A, A.shift(a, 5)),
        op_sup(A, A.shift(a, 6), A.shift(b, 6)),
        alpha_op(A, 1),
        op_sub(A, A.shift(a, 9), A.shift(ba, 8)),
    )

def _ev_dpe(A, xs, beta):
    a, b = xs
    return [(_mikheev_chain(A, a, b), _d_term(A, a, b) + _e_term(A, a, b))]

def _ev_d0(A, xs, beta):
    a, b = xs
    return [(_d_term(A, a, b), zero_op(A.dim))]

def _ev_e0(A, xs, beta):
    a, b = xs
    return [(_e_term(A, a, b), zero_op(A.dim))]

def _ev_prop(A, xs, beta):
    a, b = xs
    return [(_mikheev_chain(A, a, b), zero_op(A.dim))]


def _entry(tag, label, var_names, kind, mult, ralt, elem_degree, map_weight, fn):
    return IdentityInstance(
        tag=tag,
        label=label,
        arity=len(var_names),
        kind=kind,
        var_names=tuple(var_names),
        needs_multiplicative=mult,
        needs_right_alternative=ralt,
        elem_degree=elem_degree,
        map_weight=map_weight,
        evaluate=fn,
    )


_REGISTRY: tuple[IdentityInstance, ...] = (
    _entry("xyy", "right alternativity, expanded: (xy)a(y) = a(x)(yy)",
           ("x", "y"), "element", False, False, 3, 6, _ev_xyy),
    _entry("linearized", "Hom-associator is antisymmetric in its last two slots",
           ("x", "y", "z"), "element", False, True, 3, 6, _ev_linearized),
    _entry("teichmuller", "five-term Hom-Teichmuller identity",
           ("w", "x", "y", "z"), "element", True, False, 4, 12, _ev_teichmuller),
    _entry("xyyz", "associator absorption: (a(x), a(y), yz) = (x,y,z) a^2(y)",
           ("x", "y", "z"), "element", True, True, 3, 12, _ev_xyyz),
    _entry("moufang", "right Hom-Moufang identity",
           ("x", "y", "z"), "element", True, True, 3, 10, _ev_moufang),
    _entry("beta2", "twice-twisted associator equals the associator of the twist",
           ("x", "y", "z"), "element", False, False, 3, 18, _ev_beta2),
    _entry("eq1", "operator right alternativity: a'a_1' = alpha (a^2)'",
           ("a",), "operator", False, True, 2, 6, _ev_eq1),
    _entry("eq2", "operator right Hom-Moufang: a'b_1'a_2' = alpha^2 ((ab)a_1)'",
           ("a", "b"), "operator", True, True, 3, 12, _ev_eq2),
    _entry("eq2p", "linearized operator right Hom-Moufang",
           ("a", "b", "c"), "operator", True, True, 3, 12, _ev_eq2p),
    _entry("eq3a", "superscript operator vanishes on the diagonal: a^a = 0",
           ("a",), "operator", False, True, 2, 6, _ev_eq3a),
    _entry("eq3b", "superscript operator is antisymmetric: a^b + b^a = 0",
           ("a", "b"), "operator", False, True, 2, 6, _ev_eq3b),
    _entry("eq5", "superscript then shifted subscript annihilates: a^b (a_2)_(b_2) = 0",
           ("a", "b"), "operator", True, True, 4, 20, _ev_eq5),
    _entry("eq5p", "linearization of the superscript/subscript annihilation",
           ("a", "b", "c"), "operator", True, True, 4, 20, _ev_eq5p),
    _entry("eq6", "subscript then shifted superscript is a commutator-associator",
           ("a", "b"), "operator", True, True, 4, 20, _ev_eq6),
    _entry("eq7", "subscript, right multiplication, then superscript collapses",
           ("a", "b"), "operator", True, True, 5, 28, _ev_eq7),
    _entry("eq8", "shifted (a,a,b) annihilates the commutator associator",
           ("a", "b"), "element", True, True, 7, 24, _ev_eq8),
    _entry("eq9", "shifted (a,a,b) annihilates the commutator-product associator",
           ("a", "b"), "element", True, True, 8, 28, _ev_eq9),
    _entry("eq10", "expansion of alpha^2 p_k' through superscript operators (k = 0,1,2)",
           ("a", "b"), "operator", True, True, 3, 20, _ev_eq10),
    _entry("eq10p", "expansion of alpha^2 p_k' through subscript operators (k = 0,1,2)",
           ("a", "b"), "operator", True, True, 3, 20, _ev_eq10p),
    _entry("dpe", "two-term split of the Mikheev operator chain",
           ("a", "b"), "operator", True, True, 11, 60, _ev_dpe),
    _entry("d0", "first split term of the Mikheev operator chain vanishes",
           ("a", "b"), "operator", True, True, 11, 60, _ev_d0),
    _entry("e0", "second split term of the Mikheev operator chain vanishes",
           ("a", "b"), "operator", True, True, 11, 60, _ev_e0),
    _entry("prop", "the Mikheev operator chain a^b p'p_1'p_2' alpha^6 vanishes",
           ("a", "b"), "operator", True, True, 11, 48, _ev_prop),
    _entry("theorem", "twisted Mikheev identity: alpha^6((a,a,b)^4) = 0",
           ("a", "b"), "element", True, True, 12, 24, _ev_theorem),
    _entry("mikheev_classical", "Mikheev identity (a,a,b)^4 = 0 (meaningful for injective twists)",
           ("a", "b"), "element", True, True, 12, 12, _ev_classical),
)


def registry() -> tuple[IdentityInstance, ...]:
    """All verifiable identities in a stable order."""
    return _REGISTRY


def identity_tags() -> list[str]:
    return [inst.tag for inst in _REGISTRY]


def get_identity(tag: str) -> IdentityInstance:
    for inst in _REGISTRY:
        if inst.tag == tag:
            return inst
    raise ValueError(f"unknown identity {tag!r}")


# -- strategy drivers ----------------------------------------------------------


def _first_mismatch(
    pairs: list[tuple[Side, Side]]
) -> tuple[int, Side] | None:
    """Index and difference of the first unequal pair, if any."""
    for idx, (lhs, rhs) in enumerate(pairs):
        if isinstance(lhs, Element):
            diff = lhs - rhs
            if not diff.is_zero():
                return idx, diff
        else:
            diff = lhs - rhs
            if not diff.is_zero():
                return idx, diff
    return None


def _probe_side(diff: Side) -> tuple[Element, int | None]:
    """Nonzero element extracted from a difference (row probe for operators)."""
    if isinstance(diff, Element):
        return diff, None
    probe = min(diff.rows)
    coords: list = [0] * diff.dim
    for k, c in diff.rows[probe]:
        coords[k] = c
    return Element(tuple(coords)), probe


def _find_point(
    A: HomAlgebra,
    inst: IdentityInstance,
    beta: RowTable,
    variables: Sequence[str],
    seed: int = 0,
) -> tuple[dict[str, Rational], Element, int | None, int]:
    """Hunt a concrete integer point where a symbolically failing identity
    still fails; returns (point, difference element, probe, pair index)."""
    rng = random.Random(seed)
    for attempt in range(1000):
        bound = 3 + attempt // 50
        point = {v: rng.randint(-bound, bound) for v in variables}
        A_pt = substitute_params(A, {p: point[p] for p in A.params})
        beta_pt = substitute_rows(beta, point) if beta else beta
        xs = [
            Element(tuple(point.get(f"{name}_{i + 1}", 0) for i in range(A.dim)))
            for name in inst.var_names
        ]
        hit = _first_mismatch(inst.evaluate(A_pt, xs, beta_pt))
        if hit is not None:
            idx, diff = hit
            element, probe = _probe_side(diff)
            return point, element, probe, idx
    raise RuntimeError("could not locate a concrete failing point")


def _support_generics(
    A: HomAlgebra, prefixes: Sequence[str], supports: Sequence[tuple[int, ...]]
) -> list[Element]:
    out = []
    for prefix, support in zip(prefixes, supports):
        coords: list = [0] * A.dim
        for i in support:
            coords[i] = Poly.variable(f"{prefix}_{i + 1}")
        out.append(Element(tuple(coords)))
    return out


def _support_tuples(dim: int, max_size: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for size in range(1, min(max_size, dim) + 1):
        out.extend(itertools.combinations(range(dim), size))
    return out


def _verify_generic(A, inst, beta) -> CheckReport:
    extended = A
    xs = []
    for name in inst.var_names:
        extended, x = generic_element(extended, name)
        xs.append(x)
    hit = _first_mismatch(inst.evaluate(extended, xs, beta))
    if hit is None:
        return CheckReport(inst.tag, HOLDS, "generic")
    variables = list(extended.params)
    point, element, probe, pair = _find_point(extended, inst, beta, variables)
    return CheckReport(
        inst.tag, FAILS, "generic",
        witness=Witness(element=element, point=point, probe=probe, pair_index=pair),
    )


def _verify_subset(A, inst, beta, subset_max: int) -> CheckReport:
    supports = _support_tuples(A.dim, subset_max)
    checked = 0
    for combo in itertools.product(supports, repeat=inst.arity):
        checked += 1
        xs = _support_generics(A, inst.var_names, combo)
        hit = _first_mismatch(inst.evaluate(A, xs, beta))
        if hit is not None:
            variables = list(A.params) + [
                f"{prefix}_{i + 1}"
                for prefix, support in zip(inst.var_names, combo)
                for i in support
            ]
            point, element, probe, pair = _find_point(A, inst, beta, variables)
            return CheckReport(
                inst.tag, FAILS, "subset", points=checked,
                witness=Witness(element=element, point=point, probe=probe, pair_index=pair),
            )
    return CheckReport(inst.tag, HOLDS, "subset", points=checked)


def _verify_random(A, inst, beta, seed: int, points: int) -> CheckReport:
    rng = random.Random(seed)
    bound = inst.degree_bound(A)
    for _ in range(points):
        point: dict[str, Rational] = {}
        for p in A.params:
            point[p] = rng.randint(-RANDOM_BOUND, RANDOM_BOUND)
        xs = []
        for name in inst.var_names:
            coords = []
            for i in range(A.dim):
                value = rng.randint(-RANDOM_BOUND, RANDOM_BOUND)
                point[f"{name}_{i + 1}"] = value
                coords.append(value)
            xs.append(Element(tuple(coords)))
        A_pt = substitute_params(A, {p: point[p] for p in A.params})
        beta_pt = substitute_rows(beta, point) if beta else beta
        hit = _first_mismatch(inst.evaluate(A_pt, xs, beta_pt))
        if hit is not None:
            idx, diff = hit
            element, probe = _probe_side(diff)
            return CheckReport(
                inst.tag, FAILS, "random", points=points, seed=seed, degree_bound=bound,
                witness=Witness(element=element, point=point, probe=probe, pair_index=idx),
            )
    return CheckReport(inst.tag, RANDOM_PASS, "random", points=points, seed=seed, degree_bound=bound)


def _check_preconditions(
    A: HomAlgebra,
    inst: IdentityInstance,
    beta: RowTable,
    known: dict[str, CheckReport] | None = None,
) -> None:
    known = known if known is not None else {}
    if inst.needs_multiplicative:
        report = known.setdefault("multiplicative", is_multiplicative(A))
        if not report.passed():
            raise PreconditionError(inst.tag, "multiplicative", report)
    if inst.needs_right_alternative:
        report = known.setdefault("right-alt", is_right_hom_alternative(A))
        if not report.passed():
            raise PreconditionError(inst.tag, "right Hom-alternative", report)
    if inst.tag == "beta2":
        report = known.setdefault("weak-morphism", is_weak_morphism(A, A, beta))
        if not report.passed():
            raise PreconditionError(inst.tag, "twisted by a weak morphism", report)


def _resolve_beta(A: HomAlgebra, beta: RowsLike | None) -> RowTable:
    if beta is None:
        return dict(A.alpha)
    return normalize_rows(A.dim, beta)


def verify(
    A: HomAlgebra,
    tag: str,
    strategy: str = "random",
    *,
    seed: int = 0,
    points: int = 50,
    beta: RowsLike | None = None,
    subset_max: int = 3,
    skip_preconditions: bool = False,
    _known: dict[str, CheckReport] | None = None,
) -> CheckReport:
    """Verify one registry identity on an algebra.

    ``beta`` (sparse rows or a dense matrix) is only consulted by the
    ``beta2`` entry and defaults to the algebra's own twisting map.
    Precondition violations raise :class:`PreconditionError`.
    """
    inst = get_identity(tag)
    beta_rows = _resolve_beta(A, beta)
    if not skip_preconditions:
        _check_preconditions(A, inst, beta_rows, _known)
    if strategy == "generic":
        return _verify_generic(A, inst, beta_rows)
    if strategy == "subset":
        return _verify_subset(A, inst, beta_rows, subset_max)
    if strategy == "random":
        return _verify_random(A, inst, beta_rows, seed, points)
    raise ValueError(f"unknown strategy {strategy!r} (expected generic, subset, or random)")


@dataclass
class BatchResult:
    """Per-entry outcome of a batch run; exactly one of report/error is set."""

    tag: str
    report: CheckReport | None = None
    error: str | None = None

    def passed(self) -> bool:
        return self.report is not None and self.report.passed()


def verify_all(
    A: HomAlgebra,
    strategy: str = "random",
    *,
    seed: int = 0,
    points: int = 50,
    beta: RowsLike | None = None,
    subset_max: int = 3,
) -> list[BatchResult]:
    """Run every registry identity, sharing precondition checks across
    entries and recording per-entry errors without aborting the batch."""
    beta_rows = _resolve_beta(A, beta)
    known: dict[str, CheckReport] = {}
    results = []
    for inst in _REGISTRY:
        try:
            _check_preconditions(A, inst, beta_rows, known)
            report = verify(
                A, inst.tag, strategy,
                seed=seed, points=points, beta=beta_rows, subset_max=subset_max,
                skip_preconditions=True,
            )
            results.append(BatchResult(inst.tag, report=report))
        except PreconditionError as exc:
            results.append(BatchResult(inst.tag, error=str(exc)))
    return results


def smallest_alpha_exponent(
    A: HomAlgebra, a: Element, b: Element, max_m: int = 6
) -> int | None:
    """Least ``0 <= m <= max_m`` with ``alpha^m((a,a,b)^4) = 0``, else None."""
    q = A.hom_power(_assoc_p(A, a, b), 4)
    for m in range(max_m + 1):
        if A.shift(q, m).is_zero():
            return m
    return None


def replay_identity_witness(
    A: HomAlgebra, report: CheckReport, beta: RowsLike | None = None
) -> Element:
    """Re-evaluate a failing identity report at its stored point and return
    the nonzero difference element (probing the recorded basis row for
    operator identities)."""
    if report.witness is None or report.witness.point is None:
        raise ValueError("report carries no point witness")
    inst = get_identity(report.check)
    point = report.witness.point
    beta_rows = _resolve_beta(A, beta)
    A_pt = substitute_params(A, {p: point[p] for p in A.params if p in point})
    beta_pt = substitute_rows(beta_rows, point) if beta_rows else beta_rows
    xs = [
        Element(tuple(point.get(f"{name}_{i + 1}", 0) for i in range(A.dim)))
        for name in inst.var_names
    ]
    pairs = inst.evaluate(A_pt, xs, beta_pt)
    idx = report.witness.pair_index or 0
    lhs, rhs = pairs[idx]
    diff = lhs - rhs
    if isinstance(diff, Element):
        return diff
    probe = report.witness.probe
    if probe is None:
        raise ValueError("operator witness without probe index")
    coords: list = [0] * diff.dim
    for k, c in diff.rows.get(probe, ()):
        coords[k] = c
    return Element(tuple(coords))
