"""Normal forms, Buchberger's algorithm, reduced Groebner bases, and ideals.

Determinism contract: normal_form always reduces the greatest reducible term by
the first eligible divisor in the listed order; buchberger selects pairs by
minimal lcm degree with ties broken by pair index; reduce_gb returns the unique
reduced monic basis sorted descending by leading monomial.
"""

from __future__ import annotations

import heapq

from .errors import UsageError
from .fields import PrimeField
from .poly import Polynomial, Ring, mono_divides, mono_lcm


def _require_ring(ring: Ring, polys) -> None:
    for f in polys:
        if type(f) is not Polynomial or f.ring != ring:
            raise UsageError("polynomials live in different rings")


def _sub_scaled_tail(work, start, g_terms, q, kshift, p):
    """work[start+1:] minus q * x^kshift * g_terms[1:].

    The heads cancel by construction (q was chosen so the leading terms match),
    so they are skipped on both sides. Keys shift additively.
    """
    out = []
    i, j = start + 1, 1
    lw, lg = len(work), len(g_terms)
    if p is None:
        while i < lw and j < lg:
            ka, ca = work[i]
            kg, cg = g_terms[j]
            kb = tuple(a + b for a, b in zip(kg, kshift))
            if ka > kb:
                out.append(work[i])
                i += 1
            elif ka < kb:
                out.append((kb, -q * cg))
                j += 1
            else:
                c = ca - q * cg
                if c != 0:
                    out.append((ka, c))
                i += 1
                j += 1
        while j < lg:
            kg, cg = g_terms[j]
            out.append((tuple(a + b for a, b in zip(kg, kshift)), -q * cg))
            j += 1
    else:
        while i < lw and j < lg:
            ka, ca = work[i]
            kg, cg = g_terms[j]
            kb = tuple(a + b for a, b in zip(kg, kshift))
            if ka > kb:
                out.append(work[i])
                i += 1
            elif ka < kb:
                out.append((kb, -q * cg % p))
                j += 1
            else:
                c = (ca - q * cg) % p
                if c:
                    out.append((ka, c))
                i += 1
                j += 1
        while j < lg:
            kg, cg = g_terms[j]
            out.append((tuple(a + b for a, b in zip(kg, kshift)), -q * cg % p))
            j += 1
    out.extend(work[i:])
    return out


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of f on division by the sequence G.

    No term of the result is divisible by any leading monomial of G, and
    f - result lies in <G>.
    """
    G = list(G)
    ring = f.ring
    _require_ring(ring, G)
    if any(g.is_zero for g in G):
        raise UsageError("normal_form divisors must be nonzero")
    if not G or f.is_zero:
        return f
    field = ring.field
    p = field.p if isinstance(field, PrimeField) else None
    exps_of = ring.order.exps
    divisors = [
        (g.leading_exps, g.leading_key, field.inv(g.leading_coeff), g.terms) for g in G
    ]
    work = list(f.terms)
    start = 0
    remainder = []
    while start < len(work):
        k0, c0 = work[start]
        e0 = exps_of(k0)
        for dexps, dkey, dinv, dterms in divisors:
            ok = True
            for x, y in zip(dexps, e0):
                if x > y:
                    ok = False
                    break
            if ok:
                q = c0 * dinv % p if p is not None else c0 * dinv
                kshift = tuple(a - b for a, b in zip(k0, dkey))
                work = _sub_scaled_tail(work, start, dterms, q, kshift, p)
                start = 0
                break
        else:
            remainder.append(work[start])
            start += 1
    return Polynomial(ring, tuple(remainder))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g; the leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise UsageError("s_polynomial needs nonzero inputs")
    f._require_same_ring(g)
    field = f.ring.field
    ef, eg = f.leading_exps, g.leading_exps
    lcm = mono_lcm(ef, eg)
    left = f.mul_term(field.inv(f.leading_coeff), tuple(a - b for a, b in zip(lcm, ef)))
    right = g.mul_term(field.inv(g.leading_coeff), tuple(a - b for a, b in zip(lcm, eg)))
    return left - right


def buchberger(gens, use_chain_criterion: bool = True):
    """A Groebner basis of <gens> (monic, not autoreduced).

    Pair selection is the normal strategy: minimal lcm degree first, ties by
    pair index. The coprime criterion always applies; the chain criterion is
    controlled by the flag.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return []
    ring = gens[0].ring
    _require_ring(ring, gens)
    G = []
    seen = set()
    for g in gens:
        m = g.monic()
        if m.terms not in seen:
            seen.add(m.terms)
            G.append(m)
    lead = [g.leading_exps for g in G]
    pairs = []
    for j in range(len(G)):
        for i in range(j):
            lcm = mono_lcm(lead[i], lead[j])
            heapq.heappush(pairs, (sum(lcm), i, j))
    done = set()
    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        li, lj = lead[i], lead[j]
        lcm = mono_lcm(li, lj)
        if all(x + y == z for x, y, z in zip(li, lj, lcm)):
            continue  # coprime leading monomials
        if use_chain_criterion and _chain_applies(i, j, lcm, lead, done):
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if not r.is_zero:
            G.append(r.monic())
            lead.append(r.leading_exps)
            new = len(G) - 1
            for k in range(new):
                lcm = mono_lcm(lead[k], lead[new])
                heapq.heappush(pairs, (sum(lcm), k, new))
    return G


def _chain_applies(i, j, lcm, lead, done) -> bool:
    for k in range(len(lead)):
        if k == i or k == j:
            continue
        if mono_divides(lead[k], lcm):
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a in done and b in done:
                return True
    return False


def reduce_gb(G):
    """The unique reduced monic Groebner basis of <G>, sorted descending by lm.

    Autoreduces to a fixpoint (every element in normal form against the
    others), which both minimalizes a Groebner basis and absorbs redundant
    presentations like [x^2, x^2 + y^2].
    """
    work = [g for g in G if not g.is_zero]
    if not work:
        return ()
    ring = work[0].ring
    _require_ring(ring, work)
    work = [g.monic() for g in work]
    stable = False
    while not stable:
        stable = True
        passed = []
        for i, g in enumerate(work):
            others = passed + work[i + 1 :]
            r = normal_form(g, others) if others else g
            if r != g:
                stable = False
            if not r.is_zero:
                passed.append(r.monic())
        work = passed
    work.sort(key=lambda g: g.leading_key, reverse=True)
    return tuple(work)


class Ideal:
    """An ideal given by generators, with a lazily cached reduced Groebner basis.

    The cache is compute-then-publish: the basis is assembled completely before
    the single attribute assignment, so concurrent readers either see None and
    recompute the same value or see the finished tuple.
    """

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: Ring, generators):
        generators = tuple(generators)
        _require_ring(ring, generators)
        self.ring = ring
        self.generators = generators
        self._gb = None

    def groebner_basis(self):
        gb = self._gb
        if gb is None:
            gb = reduce_gb(buchberger(self.generators))
            self._gb = gb
        return gb

    @property
    def is_zero(self) -> bool:
        return not self.groebner_basis()

    @property
    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0] == self.ring.one

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    if f.ring != I.ring:
        raise UsageError("polynomial and ideal live in different rings")
    gb = I.groebner_basis()
    if not gb:
        return f.is_zero
    return normal_form(f, gb).is_zero


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality of ideals via identity of reduced Groebner bases."""
    if I.ring != J.ring:
        raise UsageError("ideals live in different rings")
    return I.groebner_basis() == J.groebner_basis()
