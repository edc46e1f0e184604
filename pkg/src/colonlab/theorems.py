"""Verifiers for the colon-power ladder, Hilbert symmetry, and their equivalence.

Index ranges follow the statements exactly: the complete-intersection ladder
runs over i = 0..delta+1, the Gorenstein-quotient ladder and the corollary over
i = 0..delta. Reports carry per-rung basis sizes so a failure localizes without
rerunning anything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InternalError, PreconditionError, UsageError
from .fields import PrimeField
from .groebner import Ideal, ideal_equal
from .hilbert import (
    HilbertTable,
    filtration_hilbert,
    graded_hilbert,
    image_power_chain,
    is_symmetric,
    nilpotency_index,
)
from .ideal_ops import (
    QuotientRing,
    colon,
    ideal_sum,
    irrelevant_power,
    is_gorenstein,
    make_quotient,
    monomials_of_degree,
)
from .poly import Ring


@dataclass(frozen=True)
class LadderRung:
    i: int
    lhs_gb_size: int
    rhs_gb_size: int
    equal: bool


@dataclass(frozen=True)
class LadderReport:
    delta: int
    rungs: tuple
    holds: bool


@dataclass(frozen=True)
class EquivalenceReport:
    delta: int
    ladder_holds: bool
    table: HilbertTable
    symmetric: bool
    consistent: bool
    rungs: tuple


def _homogeneous_degrees(gens):
    degrees = []
    for g in gens:
        homogeneous, degree = g.is_homogeneous()
        if not homogeneous or degree is None or degree < 1:
            raise PreconditionError(
                f"generator {g} is not homogeneous of positive degree"
            )
        degrees.append(degree)
    return degrees


def verify_macaulay_ladder(gens) -> LadderReport:
    """Check I : m^i = I + m^(delta+1-i) for i = 0..delta+1.

    Requires n homogeneous generators in n variables cutting out an Artinian
    quotient (a complete intersection), with delta = sum(d_i) - n.
    """
    gens = list(gens)
    if not gens:
        raise PreconditionError("no generators given")
    ring = gens[0].ring
    if len(gens) != ring.nvars:
        raise PreconditionError(
            f"need exactly {ring.nvars} generators in {ring.nvars} variables, got {len(gens)}"
        )
    degrees = _homogeneous_degrees(gens)
    I = Ideal(ring, tuple(gens))
    make_quotient(I)  # raises if the quotient is not Artinian
    delta = sum(degrees) - ring.nvars
    rungs = []
    for i in range(delta + 2):
        lhs = colon(I, irrelevant_power(ring, i))
        rhs = ideal_sum(I, irrelevant_power(ring, delta + 1 - i))
        rungs.append(
            LadderRung(
                i,
                len(lhs.groebner_basis()),
                len(rhs.groebner_basis()),
                ideal_equal(lhs, rhs),
            )
        )
    return LadderReport(delta, tuple(rungs), all(r.equal for r in rungs))


def verify_symmetry(J: Ideal):
    """Graded table of an Artinian Gorenstein graded quotient and its symmetry."""
    A = make_quotient(J)
    table = graded_hilbert(A)  # also enforces homogeneity
    if not is_gorenstein(A):
        raise PreconditionError("quotient is not Gorenstein (socle dimension is not 1)")
    return table, is_symmetric(table)


def verify_main_equivalence(A: QuotientRing, I: Ideal) -> EquivalenceReport:
    """Check (0 : I^i = I^(delta+1-i) for all i) <=> (H(I, i) symmetric).

    A must be Artinian Gorenstein; I is an ambient ideal read modulo the
    defining ideal, proper in A. Both sides of the equivalence are computed
    and the report's `consistent` flag records whether they agree.
    """
    if not is_gorenstein(A):
        raise PreconditionError("quotient is not Gorenstein (socle dimension is not 1)")
    J = A.defining
    ring = A.ring
    try:
        chain = image_power_chain(A, I)
    except UsageError as exc:
        raise PreconditionError(str(exc)) from None
    delta = len(chain)

    def power_image(k: int) -> Ideal:
        if k == 0:
            return ideal_sum(J, Ideal(ring, (ring.one,)))
        if k > delta:
            return J
        return ideal_sum(J, Ideal(ring, tuple(chain[k - 1])))

    rungs = []
    for i in range(delta + 1):
        lhs = colon(J, power_image(i))
        rhs = power_image(delta + 1 - i)
        rungs.append(
            LadderRung(
                i,
                len(lhs.groebner_basis()),
                len(rhs.groebner_basis()),
                ideal_equal(lhs, rhs),
            )
        )
    ladder_holds = all(r.equal for r in rungs)
    table = filtration_hilbert(A, I)
    if table.delta != delta:
        raise InternalError("filtration table disagrees with the power chain")
    symmetric = is_symmetric(table)
    return EquivalenceReport(
        delta, ladder_holds, table, symmetric, ladder_holds == symmetric, tuple(rungs)
    )


def verify_corollary(J: Ideal) -> LadderReport:
    """Check 0 : m^i = m^(delta+1-i) for i = 0..delta in a graded Gorenstein quotient."""
    A = make_quotient(J)
    graded_hilbert(A)  # enforces homogeneity
    if not is_gorenstein(A):
        raise PreconditionError("quotient is not Gorenstein (socle dimension is not 1)")
    ring = A.ring
    delta = nilpotency_index(A, irrelevant_power(ring, 1))
    rungs = []
    for i in range(delta + 1):
        lhs = colon(J, ideal_sum(J, irrelevant_power(ring, i)))
        rhs = ideal_sum(J, irrelevant_power(ring, delta + 1 - i))
        rungs.append(
            LadderRung(
                i,
                len(lhs.groebner_basis()),
                len(rhs.groebner_basis()),
                ideal_equal(lhs, rhs),
            )
        )
    return LadderReport(delta, tuple(rungs), all(r.equal for r in rungs))


def check_delta_identity(gens) -> bool:
    """Top nonzero graded degree equals sum(d_i) - n and carries length 1."""
    gens = list(gens)
    if not gens:
        raise PreconditionError("no generators given")
    ring = gens[0].ring
    if len(gens) != ring.nvars:
        raise PreconditionError(
            f"need exactly {ring.nvars} generators in {ring.nvars} variables, got {len(gens)}"
        )
    degrees = _homogeneous_degrees(gens)
    A = make_quotient(Ideal(ring, tuple(gens)))
    table = graded_hilbert(A)
    expected = sum(degrees) - ring.nvars
    return table.delta == expected and table.values[table.delta] == 1


STORCH_FIELD = PrimeField(2)
STORCH_VARIABLES = ("x", "y")
STORCH_GENERATORS = ("x^2+y^3", "x^2+x*y+y^3")


def storch_ring() -> Ring:
    return Ring(STORCH_VARIABLES, STORCH_FIELD)


def storch_ideal(ring: Ring | None = None) -> Ideal:
    ring = ring if ring is not None else storch_ring()
    return Ideal(ring, tuple(ring.parse(s) for s in STORCH_GENERATORS))


def storch_counterexample() -> EquivalenceReport:
    """The characteristic-2 Gorenstein quotient whose ladder fails.

    Builds the fixture, asserts Gorensteinness, and returns the equivalence
    report for I = m: the filtration table is (1, 2, 1, 1), it is not
    symmetric, and the ladder fails (exactly at i = 2), consistently.
    """
    ring = storch_ring()
    A = make_quotient(storch_ideal(ring))
    if not is_gorenstein(A):
        raise InternalError("counterexample fixture must be Gorenstein")
    return verify_main_equivalence(A, irrelevant_power(ring, 1))


def random_complete_intersection(rng: random.Random, nvars: int, max_degree: int = 4,
                                 field=None, max_attempts: int = 100):
    """Random homogeneous generators of an Artinian complete intersection.

    Samples dense homogeneous polynomials of random degrees in 1..max_degree
    with uniform coefficients and rejects until the Artinian check passes.
    Returns (generators, degrees).
    """
    if field is None:
        field = PrimeField(32003)
    names = ("x", "y", "z", "w")[:nvars] if nvars <= 4 else tuple(
        f"x{i + 1}" for i in range(nvars)
    )
    ring = Ring(names, field)
    degrees = [rng.randint(1, max_degree) for _ in range(nvars)]
    for _ in range(max_attempts):
        gens = []
        for d in degrees:
            while True:
                poly = ring.from_terms(
                    (e, field.random_element(rng)) for e in monomials_of_degree(ring, d)
                )
                if not poly.is_zero:
                    gens.append(poly)
                    break
        try:
            make_quotient(Ideal(ring, tuple(gens)))
        except PreconditionError:
            continue
        return gens, degrees
    raise PreconditionError(
        f"failed to sample an Artinian complete intersection in {max_attempts} attempts"
    )
