"""Matrix families built from incidence functions on a poset, together
with the closed-form determinant predictions, always verified against
the exact determinant engine rather than trusted.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

from .arith import divisors, euler_phi, kth_root, mobius, ramanujan_sum
from .matrix import SquareMatrix
from .poset import IncidenceFunction, Poset, divisor_poset, mobius_function, zeta_function
from .ring import Int, Rat, RingValue, TagMismatchError, one_like, zero_like

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_FAILED = "hypothesis-failed"


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one determinant-identity check."""

    name: str
    description: str
    computed: RingValue | None
    predicted: RingValue | None
    verdict: str
    elapsed: float
    size: int = 0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def line(self) -> str:
        c = "-" if self.computed is None else str(self.computed)
        p = "-" if self.predicted is None else str(self.predicted)
        out = f"{self.verdict.upper()} {self.name} det={c} predicted={p}"
        if self.detail:
            out = f"{out} {self.detail}"
        return out

    def machine_line(self) -> str:
        c = "-" if self.computed is None else str(self.computed)
        p = "-" if self.predicted is None else str(self.predicted)
        return "\t".join([self.name, str(self.size), c, p, self.verdict])


def make_report(
    name: str,
    description: str,
    size: int,
    computed: RingValue,
    predicted: RingValue,
    started: float,
    detail: str = "",
) -> IdentityReport:
    """Report whose verdict is pass exactly when computed == predicted."""
    verdict = PASS if computed == predicted else FAIL
    return IdentityReport(
        name=name,
        description=description,
        computed=computed,
        predicted=predicted,
        verdict=verdict,
        elapsed=time.perf_counter() - started,
        size=size,
        detail=detail,
    )


def _check_host(p: Poset, *fns: IncidenceFunction) -> None:
    for f in fns:
        if f.host != p:
            raise ValueError("incidence function lives on a different poset")
    tags = {type(f.zero) for f in fns}
    if len(tags) > 1:
        raise TagMismatchError("incidence functions carry different ring tags")


def incidence_matrix(p: Poset, f: IncidenceFunction) -> SquareMatrix:
    """Matrix of an incidence function, rows and columns in linear-extension order."""
    _check_host(p, f)
    lin = p.lin_ext
    return SquareMatrix([[f(a, b) for b in lin] for a in lin])


def incidence_product_matrix(
    p: Poset, f: IncidenceFunction, g: IncidenceFunction
) -> SquareMatrix:
    """Matrix with entry (a, b) = sum over c of f(c, a) * g(c, b).

    Only c below both a and b can contribute, so the sum is restricted to
    common lower bounds.
    """
    _check_host(p, f, g)
    zero = zero_like(f.zero)
    lin = p.lin_ext
    rows = []
    for a in lin:
        below_a = p.below(a)
        row = []
        for b in lin:
            acc = zero
            for c in below_a & p.below(b):
                acc = acc + f(c, a) * g(c, b)
            row.append(acc)
        rows.append(row)
    return SquareMatrix(rows)


def incidence_product_det(
    p: Poset, f: IncidenceFunction, g: IncidenceFunction
) -> RingValue:
    """Predicted determinant of the product matrix: the diagonal product."""
    _check_host(p, f, g)
    acc = one_like(f.zero)
    for a in range(p.n):
        acc = acc * (f(a, a) * g(a, a))
    return acc


def scale_by_source(f: IncidenceFunction, weights: Sequence[RingValue]) -> IncidenceFunction:
    """New incidence function (a, b) -> f(a, b) * weights[a]."""
    if len(weights) != f.host.n:
        raise ValueError("need one weight per element")
    values = {(a, b): v * weights[a] for (a, b), v in f.items()}
    return IncidenceFunction(f.host, values, zero=f.zero)


def weighted_product_matrix(
    p: Poset,
    f: IncidenceFunction,
    f_weights: Sequence[RingValue],
    g: IncidenceFunction,
    g_weights: Sequence[RingValue],
) -> SquareMatrix:
    """Matrix with entry (a, b) = sum over c of f(c, a) w_f(c) g(c, b) w_g(c).

    Implemented by substituting the source-weighted functions into the
    unweighted construction, so there is a single determinant code path.
    """
    return incidence_product_matrix(
        p, scale_by_source(f, f_weights), scale_by_source(g, g_weights)
    )


def weighted_product_det(
    p: Poset,
    f: IncidenceFunction,
    f_weights: Sequence[RingValue],
    g: IncidenceFunction,
    g_weights: Sequence[RingValue],
) -> RingValue:
    return incidence_product_det(
        p, scale_by_source(f, f_weights), scale_by_source(g, g_weights)
    )


# -- Ramanujan-sum matrix (divided Möbius weights on the divisor order) --


def _ramanujan_config(n: int):
    if n < 1:
        raise ValueError("need n >= 1")
    p = divisor_poset(range(1, n + 1))
    zeta = zeta_function(p)
    g = IncidenceFunction(
        p,
        {
            (a, b): Int(mobius((b + 1) // (a + 1)))
            for a in range(n)
            for b in p.above(a)
        },
        zero=Int(0),
    )
    f_weights = [Int(a + 1) for a in range(n)]
    g_weights = [Int(1)] * n
    return p, zeta, f_weights, g, g_weights


def ramanujan_matrix(n: int) -> SquareMatrix:
    """Matrix of Ramanujan sums c(a, b) for a, b in 1..n.

    Built through the weighted incidence construction on the divisor
    order, then cross-checked entry by entry against the independent
    divisor-sum formula before being returned.
    """
    p, zeta, f_weights, g, g_weights = _ramanujan_config(n)
    m = weighted_product_matrix(p, zeta, f_weights, g, g_weights)
    vals = [a + 1 for a in p.lin_ext]
    for i, a in enumerate(vals):
        for j, b in enumerate(vals):
            if m[i, j] != Int(ramanujan_sum(a, b)):
                raise RuntimeError(
                    f"ramanujan sum cross-check failed at ({a}, {b})"
                )
    return m


def ramanujan_matrix_det(n: int) -> Int:
    """Predicted determinant of the Ramanujan-sum matrix (n factorial)."""
    return weighted_product_det(*_ramanujan_config(n))


# -- Exact k-th-root matrices on the divisor order --


def _kth_root_config(n: int, k: int, f_weights: Sequence[RingValue]):
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if len(f_weights) != n:
        raise ValueError("need one weight per element")
    p = divisor_poset(range(1, n + 1))
    values = {}
    for a in range(n):
        for b in p.above(a):
            root = kth_root((b + 1) // (a + 1), k)
            values[(a, b)] = Int(root if root is not None else 0)
    omega = IncidenceFunction(p, values, zero=Int(0))
    g_weights = [Int(1)] * n
    return p, omega, list(f_weights), omega, g_weights


def kth_root_matrix(n: int, k: int, f_weights: Sequence[RingValue]) -> SquareMatrix:
    """Matrix whose (a, b) entry sums exact k-th roots of quotients b/c and
    a/c over common divisors c, each weighted by f(c)."""
    return weighted_product_matrix(*_kth_root_config(n, k, f_weights))


def kth_root_matrix_det(n: int, k: int, f_weights: Sequence[RingValue]) -> RingValue:
    """Predicted determinant: the product of the weights, since the root of
    the trivial quotient is 1 on the diagonal."""
    return weighted_product_det(*_kth_root_config(n, k, f_weights))


# -- Meet matrices on a meet semilattice --


def meet_matrix(semilattice: Poset, f: IncidenceFunction) -> SquareMatrix:
    """Matrix with entry (a, b) = f(meet(a, b), a)."""
    _check_host(semilattice, f)
    if not semilattice.is_meet_semilattice():
        raise ValueError("poset is not a meet semilattice")
    lin = semilattice.lin_ext
    return SquareMatrix(
        [[f(semilattice.meet(a, b), a) for b in lin] for a in lin]
    )


def meet_matrix_det(semilattice: Poset, f: IncidenceFunction) -> RingValue:
    """Predicted determinant: product over a of sum over c of mu(c, a) f(c, a)."""
    _check_host(semilattice, f)
    if not semilattice.is_meet_semilattice():
        raise ValueError("poset is not a meet semilattice")
    mu = mobius_function(semilattice)
    acc = one_like(f.zero)
    for a in range(semilattice.n):
        term = zero_like(f.zero)
        for c in semilattice.below(a):
            term = term + f(c, a).scale(mu(c, a).v)
        acc = acc * term
    return acc


# -- GCD matrices on sets of positive integers --


def gcd_matrix(s: Sequence[int]) -> SquareMatrix:
    """Matrix of pairwise greatest common divisors."""
    vals = list(s)
    if not vals:
        raise ValueError("need at least one value")
    if any(v < 1 for v in vals):
        raise ValueError("values must be positive")
    if len(set(vals)) != len(vals):
        raise ValueError("values must be distinct")
    return SquareMatrix(
        [[Int(math.gcd(a, b)) for b in vals] for a in vals]
    )


def totient_product(s: Sequence[int]) -> Int:
    """Predicted GCD-matrix determinant for factor-closed sets: the product
    of the totients of the members."""
    acc = 1
    for a in s:
        acc *= euler_phi(a)
    return Int(acc)


def is_factor_closed(s: Sequence[int]) -> bool:
    """True when every divisor of every member is itself a member."""
    members = set(s)
    return all(d in members for a in s for d in divisors(a))


# -- Meet-closed subsets, with the ambient Möbius function --


def _ordered_subset(semilattice: Poset, subset: Sequence[int]) -> list[int]:
    s = sorted(set(subset), key=semilattice.position)
    if not s:
        raise ValueError("subset must be nonempty")
    if not semilattice.is_meet_closed(s):
        raise ValueError("subset is not meet closed")
    return s


def meet_closed_matrix(
    semilattice: Poset, subset: Sequence[int], f: IncidenceFunction
) -> SquareMatrix:
    """Matrix f(meet(a_i, a_j), a_i) over a meet-closed subset, the meet
    taken in the ambient semilattice."""
    _check_host(semilattice, f)
    if not semilattice.is_meet_semilattice():
        raise ValueError("poset is not a meet semilattice")
    s = _ordered_subset(semilattice, subset)
    return SquareMatrix(
        [[f(semilattice.meet(a, b), a) for b in s] for a in s]
    )


def meet_closed_det(
    semilattice: Poset, subset: Sequence[int], f: IncidenceFunction
) -> RingValue:
    """Predicted determinant over a meet-closed subset.

    Uses the Möbius function of the ambient semilattice: each ambient
    element d below some subset member is charged to the earliest member
    (in the fixed linear extension) that dominates it, and the i-th factor
    sums mu(c, d) f(c, a_i) over elements charged to a_i.
    """
    _check_host(semilattice, f)
    if not semilattice.is_meet_semilattice():
        raise ValueError("poset is not a meet semilattice")
    s = _ordered_subset(semilattice, subset)
    mu = mobius_function(semilattice)
    owner: dict[int, int] = {}
    for i, a in enumerate(s):
        for d in sorted(semilattice.below(a)):
            owner.setdefault(d, i)
    acc = one_like(f.zero)
    for i, a in enumerate(s):
        factor = zero_like(f.zero)
        for d, j in owner.items():
            if j != i:
                continue
            for c in semilattice.below(d):
                factor = factor + f(c, a).scale(mu(c, d).v)
        acc = acc * factor
    return acc


# -- Invertibility and positive definiteness from the diagonal --


def product_matrix_invertible(
    p: Poset, f: IncidenceFunction, g: IncidenceFunction
) -> bool:
    """True exactly when every diagonal value of f and of g is nonzero."""
    _check_host(p, f, g)
    return all(
        not f(a, a).is_zero() and not g(a, a).is_zero() for a in range(p.n)
    )


def product_matrix_positive_definite(
    p: Poset, f: IncidenceFunction, g: IncidenceFunction
) -> bool:
    """True exactly when every diagonal product f(a,a) g(a,a) is positive.

    Only meaningful for symmetric matrices over the integers or rationals;
    anything else is rejected rather than guessed at.
    """
    _check_host(p, f, g)
    if not isinstance(f.zero, (Int, Rat)):
        raise ValueError("positive definiteness needs integer or rational entries")
    if not incidence_product_matrix(p, f, g).is_symmetric():
        raise ValueError("matrix is not symmetric")
    return all((f(a, a) * g(a, a)).is_positive() for a in range(p.n))
