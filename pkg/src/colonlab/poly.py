"""Monomial orders, polynomial rings, and sparse exact multivariate polynomials.

Monomials are exponent tuples. Each order maps an exponent tuple to a sort key
that compares with native tuple comparison and is additive under monomial
multiplication (key(a*b) = key(a) + key(b) componentwise), which keeps the term
merges in the Groebner engine free of per-comparison callbacks.
"""

from __future__ import annotations

import re

from .errors import UsageError
from .fields import PrimeField

Exponents = tuple


class DegRevLex:
    """Degree first, then reverse lexicographic tie-break (smaller last exponent wins)."""

    __slots__ = ()
    name = "degrevlex"

    def key(self, exps):
        return (sum(exps),) + tuple(-e for e in reversed(exps))

    def exps(self, key):
        return tuple(-e for e in reversed(key[1:]))

    def __eq__(self, other):
        return type(other) is DegRevLex

    def __hash__(self):
        return hash("degrevlex")

    def __repr__(self):
        return "DegRevLex()"


class Lex:
    """Pure lexicographic order; the first declared variable dominates."""

    __slots__ = ()
    name = "lex"

    def key(self, exps):
        return tuple(exps)

    def exps(self, key):
        return key

    def __eq__(self, other):
        return type(other) is Lex

    def __hash__(self):
        return hash("lex")

    def __repr__(self):
        return "Lex()"


class Elim:
    """Block order: the first k variables form a dominant degrevlex block.

    Any monomial involving one of the first k variables is greater than every
    monomial supported on the remaining variables, which is what elimination
    needs.
    """

    __slots__ = ("k",)

    def __init__(self, k: int):
        if type(k) is not int or k < 1:
            raise UsageError(f"elimination block size must be a positive int, got {k!r}")
        self.k = k

    @property
    def name(self):
        return f"elim({self.k})"

    def key(self, exps):
        k = self.k
        head, tail = exps[:k], exps[k:]
        return (
            (sum(head),)
            + tuple(-e for e in reversed(head))
            + (sum(tail),)
            + tuple(-e for e in reversed(tail))
        )

    def exps(self, key):
        k = self.k
        head = tuple(-e for e in reversed(key[1 : k + 1]))
        tail = tuple(-e for e in reversed(key[k + 2 :]))
        return head + tail

    def __eq__(self, other):
        return type(other) is Elim and other.k == self.k

    def __hash__(self):
        return hash(("elim", self.k))

    def __repr__(self):
        return f"Elim({self.k})"


def order_from_name(name: str):
    if name == "degrevlex":
        return DegRevLex()
    if name == "lex":
        return Lex()
    raise UsageError(f"unknown monomial order {name!r}; expected 'degrevlex' or 'lex'")


def compare(order, a, b) -> int:
    """Compare exponent tuples under the order: -1, 0, or 1."""
    if len(a) != len(b):
        raise UsageError(f"exponent length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True iff x^a divides x^b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_quotient(a, b):
    """Exponents of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_degree(a) -> int:
    return sum(a)


_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Ring:
    """Polynomial ring descriptor: named variables, coefficient field, monomial order."""

    __slots__ = ("variables", "field", "order", "_var_index")

    def __init__(self, variables, field, order=None):
        variables = tuple(variables)
        if not variables:
            raise UsageError("a ring needs at least one variable")
        for v in variables:
            if not isinstance(v, str) or not _IDENT_RE.match(v):
                raise UsageError(f"invalid variable identifier {v!r}")
        if len(set(variables)) != len(variables):
            raise UsageError(f"duplicate variable names in {variables}")
        self.variables = variables
        self.field = field
        self.order = order if order is not None else DegRevLex()
        self._var_index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self._var_index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r} in {self}") from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.monomial((0,) * self.nvars)

    def monomial(self, exps, coeff=None) -> "Polynomial":
        if len(exps) != self.nvars or any(type(e) is not int or e < 0 for e in exps):
            raise UsageError(f"bad exponent tuple {exps!r} for {self}")
        c = self.field.one if coeff is None else self.field.element(coeff)
        if c == self.field.zero:
            return self.zero
        return Polynomial(self, ((self.order.key(tuple(exps)), c),))

    def variable(self, which) -> "Polynomial":
        i = which if type(which) is int else self.var_index(which)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return self.monomial(exps)

    def from_terms(self, pairs) -> "Polynomial":
        """Build a polynomial from (exponents, coefficient) pairs, canonicalizing."""
        field = self.field
        acc = {}
        for exps, coeff in pairs:
            exps = tuple(exps)
            if len(exps) != self.nvars or any(type(e) is not int or e < 0 for e in exps):
                raise UsageError(f"bad exponent tuple {exps!r} for {self}")
            k = self.order.key(exps)
            c = field.element(coeff)
            if k in acc:
                c = field.add(acc[k], c)
            if c == field.zero:
                acc.pop(k, None)
            else:
                acc[k] = c
        return Polynomial(self, tuple(sorted(acc.items(), reverse=True)))

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def with_elim_variable(self, base_name: str = "t"):
        """Ring with a fresh dominant variable prepended under Elim(1).

        Returns (extended_ring, index_of_new_variable).
        """
        name = base_name
        counter = 0
        while name in self._var_index:
            name = f"{base_name}{counter}"
            counter += 1
        return Ring((name,) + self.variables, self.field, Elim(1)), 0

    def __eq__(self, other):
        return (
            type(other) is Ring
            and other.variables == self.variables
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"Ring({'+'.join(self.variables)} over {self.field.name}, {self.order.name})"


def _merge_add(A, B, p):
    """A + B for canonical descending term lists; p is the modulus or None for Q."""
    out = []
    i, j, la, lb = 0, 0, len(A), len(B)
    if p is None:
        while i < la and j < lb:
            ka, ca = A[i]
            kb, cb = B[j]
            if ka > kb:
                out.append(A[i])
                i += 1
            elif ka < kb:
                out.append(B[j])
                j += 1
            else:
                c = ca + cb
                if c != 0:
                    out.append((ka, c))
                i += 1
                j += 1
    else:
        while i < la and j < lb:
            ka, ca = A[i]
            kb, cb = B[j]
            if ka > kb:
                out.append(A[i])
                i += 1
            elif ka < kb:
                out.append(B[j])
                j += 1
            else:
                c = (ca + cb) % p
                if c:
                    out.append((ka, c))
                i += 1
                j += 1
    out.extend(A[i:])
    out.extend(B[j:])
    return out


class Polynomial:
    """Immutable sparse polynomial; terms strictly descending in the ring order.

    `terms` is a tuple of (order_key, coefficient) with nonzero canonical
    coefficients; the zero polynomial has an empty tuple.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    @property
    def leading_key(self):
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def leading_coeff(self):
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return self.terms[0][1]

    @property
    def leading_exps(self):
        return self.ring.order.exps(self.leading_key)

    def iter_terms(self):
        """Yield (exponents, coefficient) pairs in descending order."""
        exps = self.ring.order.exps
        for k, c in self.terms:
            yield exps(k), c

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        exps = self.ring.order.exps
        return max(sum(exps(k)) for k, _ in self.terms)

    def is_homogeneous(self):
        """(True, degree) if all terms share one total degree; zero is (True, None)."""
        if not self.terms:
            return True, None
        exps = self.ring.order.exps
        degs = {sum(exps(k)) for k, _ in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def _require_same_ring(self, other: "Polynomial"):
        if type(other) is not Polynomial or other.ring != self.ring:
            raise UsageError("operands live in different rings")

    def __add__(self, other):
        self._require_same_ring(other)
        p = self.ring.field.p if isinstance(self.ring.field, PrimeField) else None
        return Polynomial(self.ring, tuple(_merge_add(self.terms, other.terms, p)))

    def __neg__(self):
        field = self.ring.field
        if isinstance(field, PrimeField):
            p = field.p
            return Polynomial(self.ring, tuple((k, -c % p) for k, c in self.terms))
        return Polynomial(self.ring, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "Polynomial":
        field = self.ring.field
        c = field.element(coeff)
        if c == field.zero:
            return self.ring.zero
        if isinstance(field, PrimeField):
            p = field.p
            return Polynomial(self.ring, tuple((k, c * ck % p) for k, ck in self.terms))
        return Polynomial(self.ring, tuple((k, c * ck) for k, ck in self.terms))

    def mul_term(self, coeff, exps) -> "Polynomial":
        """Multiply by coeff * x^exps (key shift keeps the term order)."""
        field = self.ring.field
        c = field.element(coeff)
        if c == field.zero or not self.terms:
            return self.ring.zero
        shift = self.ring.order.key(tuple(exps))
        if isinstance(field, PrimeField):
            p = field.p
            new = tuple(
                (tuple(a + b for a, b in zip(k, shift)), c * ck % p) for k, ck in self.terms
            )
        else:
            new = tuple(
                (tuple(a + b for a, b in zip(k, shift)), c * ck) for k, ck in self.terms
            )
        return Polynomial(self.ring, new)

    def __mul__(self, other):
        self._require_same_ring(other)
        field = self.ring.field
        acc = {}
        for ka, ca in self.terms:
            for kb, cb in other.terms:
                k = tuple(a + b for a, b in zip(ka, kb))
                prev = acc.get(k)
                acc[k] = ca * cb if prev is None else prev + ca * cb
        if isinstance(field, PrimeField):
            p = field.p
            items = [(k, c % p) for k, c in acc.items()]
            items = [(k, c) for k, c in items if c]
        else:
            items = [(k, c) for k, c in acc.items() if c != 0]
        items.sort(reverse=True)
        return Polynomial(self.ring, tuple(items))

    def __pow__(self, e: int):
        if type(e) is not int or e < 0:
            raise UsageError(f"polynomial exponent must be a nonnegative int, got {e!r}")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    def __eq__(self, other):
        return (
            type(other) is Polynomial
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        one = field.one
        pieces = []
        for exps, c in self.iter_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
            )
            negative = field.kind == "rational" and c < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == one:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({str(self)!r})"
