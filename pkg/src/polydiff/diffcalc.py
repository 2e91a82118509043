"""Forward-difference operators, numeric and symbolic.

The first difference of f at x with increment h is f(x + h) - f(x); higher
mixed differences iterate this with fresh increments, and admit the closed
vertex-sum form

    sum over delta in {0,1}^r of (-1)^(r - sum delta) f(x + sum delta_s h_s).

Both the recursion and the vertex sum are implemented and cross-checked.
Pure differences repeat a single increment and reduce to a binomial sum.

Symbolic variants act on VectorPoly values in an enlarged ring of n(1+r)
variables with block layout [x | h_1 | ... | h_r]; :func:`block_names` gives
the canonical variable names (x1..xn, h1_1..h1_n, ...) used by the formatter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .combinatorics import binomial, multinomial, stirling2
from .errors import DimensionError
from .poly import ScalarPoly, VectorPoly, as_vector_poly
from .tensor import SymTensor, tensor_apply_powers
from .vectors import Vec, as_vec, vec_add, vec_scale, zero_vec

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_CERTIFIED = "certified"
VERDICT_PROBABILISTIC = "probabilistic"


@dataclass(frozen=True)
class BlackBoxFn:
    """An opaque evaluable map Q^n -> Q^m; must be deterministic.

    When the map is backed by a VectorPoly, attach it via ``poly`` (or use
    :meth:`from_poly`) so degree and positivity checks can run symbolically.
    """

    nvars: int
    codim: int
    fn: Callable[[Vec], Sequence]
    poly: VectorPoly | None = None

    @classmethod
    def from_poly(cls, p: VectorPoly) -> "BlackBoxFn":
        p = as_vector_poly(p)
        return cls(p.nvars, p.codim, p.evaluate, poly=p)

    def __call__(self, x: Sequence) -> Vec:
        pt = as_vec(x)
        if len(pt) != self.nvars:
            raise DimensionError(f"point length {len(pt)}, expected {self.nvars}")
        value = as_vec(self.fn(pt))
        if len(value) != self.codim:
            raise DimensionError(f"value length {len(value)}, expected {self.codim}")
        return value


@dataclass(frozen=True)
class Witness:
    """One failing (or notable) evaluation: the points used and the value found.

    For differences the convention is points = (x, h_1, ..., h_r); a pure
    difference repeats its single increment, so the order r is recoverable
    as len(points) - 1.
    """

    points: tuple[Vec, ...]
    value: Vec

    def sort_key(self):
        return (self.points, self.value)


@dataclass
class DiffReport:
    """Outcome of a sampling or symbolic check.

    verdict is one of "pass" (exact), "certified" (coefficient certificate),
    "probabilistic" (clean sampling, not a proof), or "fail" (with at least
    one witness).  samples_used counts difference evaluations performed.
    """

    verdict: str
    witnesses: list[Witness] = field(default_factory=list)
    samples_used: int = 0
    seed: int = 0

    @property
    def failed(self) -> bool:
        return self.verdict == VERDICT_FAIL


Evaluable = Callable[[Vec], Vec]


def mixed_diff_at(f: Evaluable, x: Sequence, hs: Sequence[Sequence]) -> Vec:
    """Mixed difference of order r = len(hs) by the alternating vertex sum."""
    base = as_vec(x)
    incs = [as_vec(h) for h in hs]
    r = len(incs)
    total: Vec | None = None
    for delta in product((0, 1), repeat=r):
        pt = base
        for d, h in zip(delta, incs):
            if d:
                pt = vec_add(pt, h)
        term = vec_scale((-1) ** (r - sum(delta)), f(pt))
        total = term if total is None else vec_add(total, term)
    assert total is not None
    return total


def mixed_diff_recursive(f: Evaluable, x: Sequence, hs: Sequence[Sequence]) -> Vec:
    """Same difference by the defining recursion; cross-check for the vertex sum."""
    base = as_vec(x)
    incs = [as_vec(h) for h in hs]

    def rec(pt: Vec, k: int) -> Vec:
        if k == 0:
            return f(pt)
        return tuple(
            a - b for a, b in zip(rec(vec_add(pt, incs[k - 1]), k - 1), rec(pt, k - 1))
        )

    return rec(base, len(incs))


def pure_diff_at(f: Evaluable, x: Sequence, h: Sequence, r: int) -> Vec:
    """Pure difference with one repeated increment: sum (-1)^(r-k) C(r,k) f(x + k h)."""
    if r < 0:
        raise ValueError("difference order must be nonnegative")
    base = as_vec(x)
    inc = as_vec(h)
    total: Vec | None = None
    for k in range(r + 1):
        pt = vec_add(base, vec_scale(k, inc))
        term = vec_scale((-1) ** (r - k) * binomial(r, k), f(pt))
        total = term if total is None else vec_add(total, term)
    assert total is not None
    return total


def newton_expand(f: Evaluable, x: Sequence, h: Sequence, r: int) -> Vec:
    """Binomial-weighted sum of pure differences; equals f(x + r h) for any f."""
    if r < 0:
        raise ValueError("expansion order must be nonnegative")
    total: Vec | None = None
    for k in range(r + 1):
        term = vec_scale(binomial(r, k), pure_diff_at(f, x, h, k))
        total = term if total is None else vec_add(total, term)
    assert total is not None
    return total


def mixed_from_pure(f: Evaluable, x: Sequence, hs: Sequence[Sequence]) -> Vec:
    """Mixed difference as a signed sum of pure differences.

    For each delta in {0,1}^r the base point shifts by sum delta_j h_j and the
    single repeated increment is -(sum delta_j h_j / j); the division by the
    1-based position j is exact in rational arithmetic.
    """
    base = as_vec(x)
    incs = [as_vec(h) for h in hs]
    r = len(incs)
    if r < 1:
        raise ValueError("mixed-from-pure needs at least one increment")
    n = len(base)
    total: Vec | None = None
    for delta in product((0, 1), repeat=r):
        shift = zero_vec(n)
        inc = zero_vec(n)
        for j, (d, h) in enumerate(zip(delta, incs), start=1):
            if d:
                shift = vec_add(shift, h)
                inc = vec_add(inc, vec_scale(Fraction(-1, j), h))
        term = vec_scale((-1) ** sum(delta), pure_diff_at(f, vec_add(base, shift), inc, r))
        total = term if total is None else vec_add(total, term)
    assert total is not None
    return total


def block_names(n: int, r: int) -> list[str]:
    """Variable names for the enlarged ring [x | h_1 | ... | h_r]."""
    names = [f"x{i + 1}" for i in range(n)]
    for s in range(1, r + 1):
        names.extend(f"h{s}_{i + 1}" for i in range(n))
    return names


def _lift_blocks(p: VectorPoly, r: int) -> VectorPoly:
    """Reinterpret P over the n(1+r)-variable ring, x occupying block 0."""
    n = p.nvars
    pad = (0,) * (n * r)
    coords = tuple(
        ScalarPoly._build(n * (1 + r), {e + pad: c for e, c in coord.terms.items()})
        for coord in p.coords
    )
    return VectorPoly(coords)


def symbolic_mixed_diff(p: VectorPoly, r: int) -> VectorPoly:
    """Mixed difference as a polynomial in (x, h_1, ..., h_r).

    Evaluating the result at concrete blocks equals mixed_diff_at on P.  The
    recursion substitutes x -> x + h_s one block at a time, which keeps the
    intermediate polynomials small when P has bounded degree.
    """
    if r < 0:
        raise ValueError("difference order must be nonnegative")
    p = as_vector_poly(p)
    n = p.nvars
    big = n * (1 + r)
    cur = _lift_blocks(p, r)
    gens = [ScalarPoly.variable(i, big) for i in range(big)]
    for s in range(1, r + 1):
        args = list(gens)
        for i in range(n):
            args[i] = gens[i] + gens[n * s + i]
        cur = cur.compose(args, nvars_out=big) - cur
    return cur


def symbolic_pure_diff(p: VectorPoly, r: int) -> VectorPoly:
    """Pure difference as a polynomial over [x | h] (2n variables)."""
    if r < 0:
        raise ValueError("difference order must be nonnegative")
    p = as_vector_poly(p)
    n = p.nvars
    big = 2 * n
    gens = [ScalarPoly.variable(i, big) for i in range(big)]
    total = VectorPoly.zero(big, p.codim)
    for k in range(r + 1):
        args = [gens[i] + k * gens[n + i] for i in range(n)]
        total = total + ((-1) ** (r - k) * binomial(r, k)) * p.compose(args, nvars_out=big)
    return total


def homog_mixed_diff_closed(tensor: SymTensor, x: Sequence, hs: Sequence[Sequence]) -> Vec:
    """Mixed difference of the diagonal polynomial of a symmetric form, in closed form.

    Sums multinomial(k; j_0, j_1, ..., j_r) A(x^j0, h_1^j1, ..., h_r^jr) over
    j_0 >= 0 and j_1, ..., j_r >= 1 with total k; zero when r exceeds the
    order, and k! A(h_1, ..., h_r) when r equals it (x drops out).
    """
    k = tensor.order
    base = as_vec(x)
    incs = [as_vec(h) for h in hs]
    r = len(incs)
    if r > k:
        return zero_vec(tensor.codim)
    total = zero_vec(tensor.codim)
    for parts in product(range(1, k - r + 2), repeat=r):
        rest = k - sum(parts)
        if rest < 0:
            continue
        coeff = multinomial(k, [rest, *parts])
        pairs = [(base, rest)] + list(zip(incs, parts))
        total = vec_add(total, vec_scale(coeff, tensor_apply_powers(tensor, pairs)))
    return total


def homog_pure_diff_closed(tensor: SymTensor, x: Sequence, h: Sequence, r: int) -> Vec:
    """Pure difference of the diagonal polynomial via Stirling numbers.

    r! sum_{j=r}^{k} C(k, j) S(j, r) A(x^(k-j), h^j); at x = 0 this collapses
    to r! S(k, r) P_k(h), and it vanishes for r > k.
    """
    if r < 0:
        raise ValueError("difference order must be nonnegative")
    k = tensor.order
    base = as_vec(x)
    inc = as_vec(h)
    total = zero_vec(tensor.codim)
    rfact = math.factorial(r)
    for j in range(r, k + 1):
        coeff = rfact * binomial(k, j) * stirling2(j, r)
        if not coeff:
            continue
        total = vec_add(
            total, vec_scale(coeff, tensor_apply_powers(tensor, [(base, k - j), (inc, j)]))
        )
    return total
