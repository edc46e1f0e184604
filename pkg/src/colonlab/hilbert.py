"""Hilbert functions of Artinian quotients and I-adic filtrations.

Lengths are always standard-monomial counts against a reduced Groebner basis;
no generating-function arithmetic. Powers of an ideal inside the quotient are
tracked through normal-form-reduced generator sets, which leaves the image
ideals unchanged while keeping generator growth bounded by the quotient length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError, PreconditionError, UsageError
from .groebner import Ideal
from .ideal_ops import QuotientRing, ideal_sum, make_quotient

KIND_GRADED = "graded"
KIND_FILTRATION = "filtration"


@dataclass(frozen=True)
class HilbertTable:
    """Lengths indexed 0..delta plus the top index and which filtration it is."""

    values: tuple
    delta: int
    kind: str

    def __post_init__(self):
        if self.delta < 0 or len(self.values) != self.delta + 1:
            raise InternalError(f"table length {len(self.values)} != delta+1 = {self.delta + 1}")
        if self.values[self.delta] < 1:
            raise InternalError("top table entry must be positive")
        if self.kind not in (KIND_GRADED, KIND_FILTRATION):
            raise InternalError(f"unknown table kind {self.kind!r}")


def length_of_quotient(J: Ideal) -> int:
    """ell(R/J) as the number of standard monomials; J must be Artinian."""
    return make_quotient(J).length


def graded_hilbert(A: QuotientRing) -> HilbertTable:
    """Lengths of the graded pieces of A; the defining ideal must be homogeneous."""
    for g in A.defining.groebner_basis():
        homogeneous, _ = g.is_homogeneous()
        if not homogeneous:
            raise PreconditionError(
                f"defining ideal is not homogeneous: basis element {g} has mixed degrees"
            )
    if A.length == 0:
        raise PreconditionError("the zero ring has no graded Hilbert table")
    degrees = [sum(e) for e in A.standard_monomials]
    delta = max(degrees)
    values = [0] * (delta + 1)
    for d in degrees:
        values[d] += 1
    return HilbertTable(tuple(values), delta, KIND_GRADED)


def _reduced_image_generators(A: QuotientRing, I: Ideal):
    if I.ring != A.ring:
        raise UsageError("ideal and quotient live in different rings")
    gens = []
    seen = set()
    for g in I.generators:
        r = A.reduce(g)
        if r.is_zero or r.terms in seen:
            continue
        seen.add(r.terms)
        gens.append(r)
    return gens


def image_power_chain(A: QuotientRing, I: Ideal):
    """Reduced generator sets of the images of I, I^2, ... until the image is zero.

    Returns the list [gens(I^1), gens(I^2), ..., gens(I^d)] where I^(d+1) maps
    to zero in A; an m-primary proper ideal always reaches zero within length(A)
    steps.
    """
    base = _reduced_image_generators(A, I)
    if ideal_sum(A.defining, Ideal(A.ring, tuple(base))).is_unit:
        raise UsageError("ideal is the unit ideal in the quotient; a proper ideal is required")
    chain = []
    current = base
    while current:
        chain.append(current)
        if len(chain) > max(A.length, 1):
            raise PreconditionError(
                "ideal is not nilpotent in the quotient (not m-primary)"
            )
        nxt = []
        seen = set()
        for a in current:
            for b in base:
                r = A.reduce(a * b)
                if r.is_zero or r.terms in seen:
                    continue
                seen.add(r.terms)
                nxt.append(r)
        current = nxt
    return chain


def nilpotency_index(A: QuotientRing, I: Ideal) -> int:
    """The largest i with I^i nonzero in A (0 when the image of I is zero)."""
    return len(image_power_chain(A, I))


def filtration_hilbert(A: QuotientRing, I: Ideal) -> HilbertTable:
    """The table H(I, i) = ell(I^i / I^(i+1)) for i = 0..delta."""
    chain = image_power_chain(A, I)
    delta = len(chain)
    # ell(A / I^i) for i = 0..delta+1; the two ends are 0 and ell(A).
    lengths = [0]
    for gens in chain:
        lengths.append(
            length_of_quotient(ideal_sum(A.defining, Ideal(A.ring, tuple(gens))))
        )
    lengths.append(A.length)
    values = tuple(lengths[i + 1] - lengths[i] for i in range(delta + 1))
    if sum(values) != A.length:
        raise InternalError("filtration table does not sum to the quotient length")
    return HilbertTable(values, delta, KIND_FILTRATION)


def is_symmetric(table: HilbertTable) -> bool:
    v, d = table.values, table.delta
    return all(v[i] == v[d - i] for i in range(d + 1))
