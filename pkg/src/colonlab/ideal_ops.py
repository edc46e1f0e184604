"""Ideal arithmetic: sums, products, powers, intersections, colons, quotients.

Colon by an ideal is realized as the intersection of single-element colons,
each computed with the classical elimination trick (fresh dominant variable t,
then keep the t-free part of the basis). Ideals of a quotient ring R/J are
represented by ambient ideals; the image is what is meant.
"""

from __future__ import annotations

from itertools import product as cartesian_product

from .errors import InternalError, PreconditionError, UsageError
from .groebner import Ideal, normal_form
from .poly import Polynomial, Ring, mono_divides, mono_quotient


def _dedup_nonzero(polys):
    seen = set()
    out = []
    for f in polys:
        if f.is_zero or f.terms in seen:
            continue
        seen.add(f.terms)
        out.append(f)
    return out


def _require_same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise UsageError("ideals live in different rings")


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, (ring.one,))


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ())


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _require_same_ring(I, J)
    return Ideal(I.ring, _dedup_nonzero(I.generators + J.generators))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _require_same_ring(I, J)
    gens = [f * g for f in I.generators for g in J.generators]
    return Ideal(I.ring, _dedup_nonzero(gens))


def ideal_power(I: Ideal, k: int) -> Ideal:
    if type(k) is not int or k < 0:
        raise UsageError(f"ideal power exponent must be a nonnegative int, got {k!r}")
    if k == 0:
        return unit_ideal(I.ring)
    result = Ideal(I.ring, _dedup_nonzero(I.generators))
    for _ in range(k - 1):
        result = ideal_product(result, I)
    return result


def monomials_of_degree(ring: Ring, degree: int):
    """All exponent tuples of the given total degree, descending in the ring order."""
    n = ring.nvars

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for head in range(total, -1, -1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    exps = sorted(compositions(degree, n), key=ring.order.key, reverse=True)
    return exps


def irrelevant_power(ring: Ring, i: int) -> Ideal:
    """The ideal generated by all monomials of total degree exactly i."""
    if type(i) is not int or i < 0:
        raise UsageError(f"irrelevant-ideal power must be a nonnegative int, got {i!r}")
    if i == 0:
        return unit_ideal(ring)
    return Ideal(ring, tuple(ring.monomial(e) for e in monomials_of_degree(ring, i)))


def _to_extended(ring_ext: Ring, f: Polynomial) -> Polynomial:
    return ring_ext.from_terms(((0,) + e, c) for e, c in f.iter_terms())


def _from_extended(ring: Ring, f: Polynomial) -> Polynomial:
    return ring.from_terms((e[1:], c) for e, c in f.iter_terms())


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """Generators of I ∩ J via the elimination trick <t I, (1-t) J>."""
    _require_same_ring(I, J)
    ring = I.ring
    gb_i, gb_j = I.groebner_basis(), J.groebner_basis()
    if not gb_i or not gb_j:
        return zero_ideal(ring)
    if len(gb_i) == 1 and gb_i[0] == ring.one:
        return J
    if len(gb_j) == 1 and gb_j[0] == ring.one:
        return I
    ring_ext, _ = ring.with_elim_variable()
    t = ring_ext.variable(0)
    one_minus_t = ring_ext.one - t
    gens = [t * _to_extended(ring_ext, f) for f in gb_i]
    gens += [one_minus_t * _to_extended(ring_ext, g) for g in gb_j]
    basis = Ideal(ring_ext, gens).groebner_basis()
    kept = [g for g in basis if g.leading_exps[0] == 0]
    contracted = [_from_extended(ring, g) for g in kept]
    contracted.sort(key=lambda g: g.leading_key, reverse=True)
    return Ideal(ring, tuple(contracted))


def _exact_divide(f: Polynomial, d: Polynomial) -> Polynomial:
    """f / d when d divides f exactly; anything else is a bug in the caller."""
    ring = f.ring
    field = ring.field
    dexps = d.leading_exps
    dinv = field.inv(d.leading_coeff)
    quotient_terms = []
    rest = f
    while not rest.is_zero:
        e = rest.leading_exps
        if not mono_divides(dexps, e):
            raise InternalError(f"non-exact division: {f} by {d}")
        qc = field.mul(rest.leading_coeff, dinv)
        qe = mono_quotient(e, dexps)
        quotient_terms.append((qe, qc))
        rest = rest - d.mul_term(qc, qe)
    return ring.from_terms(quotient_terms)


def _colon_single(I: Ideal, f: Polynomial) -> Ideal:
    """I : (f) = (I ∩ (f)) divided term-exactly by f."""
    meet = ideal_intersect(I, Ideal(I.ring, (f,)))
    gens = [_exact_divide(g, f) for g in meet.generators]
    return Ideal(I.ring, tuple(gens))


def colon(I: Ideal, J: Ideal) -> Ideal:
    """The colon ideal I : J = {g : g J ⊆ I}."""
    _require_same_ring(I, J)
    factors = _dedup_nonzero(J.generators)
    if not factors:
        raise UsageError("colon by the zero ideal")
    gb_i = I.groebner_basis()
    result = None
    for f in factors:
        if gb_i and normal_form(f, gb_i).is_zero:
            continue  # f in I, so I : (f) is the unit ideal
        part = _colon_single(I, f)
        result = part if result is None else ideal_intersect(result, part)
    if result is None:
        return unit_ideal(I.ring)
    return result


class QuotientRing:
    """An Artinian quotient R/J with its standard-monomial basis.

    standard_monomials lists the exponent tuples outside the leading-term
    staircase of J, ascending in the ring order (so index 0 is the monomial 1).
    """

    __slots__ = ("ring", "defining", "standard_monomials")

    def __init__(self, ring: Ring, defining: Ideal, standard_monomials):
        self.ring = ring
        self.defining = defining
        self.standard_monomials = standard_monomials

    @property
    def length(self) -> int:
        return len(self.standard_monomials)

    def reduce(self, f: Polynomial) -> Polynomial:
        gb = self.defining.groebner_basis()
        return normal_form(f, gb) if gb else f

    def maximal_ideal(self) -> Ideal:
        return irrelevant_power(self.ring, 1)

    def __repr__(self):
        return f"QuotientRing({self.ring!r} / {self.defining!r}, length {self.length})"


def make_quotient(J: Ideal) -> QuotientRing:
    """Build R/J with enumerated standard monomials; J must cut out an Artinian ring."""
    ring = J.ring
    gb = J.groebner_basis()
    leads = [g.leading_exps for g in gb]
    n = ring.nvars
    bounds = []
    for j in range(n):
        pure = [
            e[j]
            for e in leads
            if all(x == 0 for i, x in enumerate(e) if i != j)
        ]
        if not pure:
            raise PreconditionError(
                f"quotient is not Artinian: no pure power of variable "
                f"'{ring.variables[j]}' among the leading monomials"
            )
        bounds.append(min(pure))
    std = [
        e
        for e in cartesian_product(*(range(b) for b in bounds))
        if not any(mono_divides(lead, e) for lead in leads)
    ]
    std.sort(key=ring.order.key)
    return QuotientRing(ring, J, tuple(std))


def socle(A: QuotientRing) -> Ideal:
    """The socle of A as an ambient ideal: (J : m)."""
    return colon(A.defining, irrelevant_power(A.ring, 1))


def is_gorenstein(A: QuotientRing) -> bool:
    """Artinian Gorenstein iff the socle is one-dimensional over the field."""
    if A.length == 0:
        return False
    return A.length - make_quotient(socle(A)).length == 1
