"""Exact multivariate polynomials over Q.

A monomial is a tuple of (Symbol, exponent) pairs with positive exponents,
sorted by the fixed symbol order.  A Poly stores its terms as a tuple of
(monomial, coefficient) pairs sorted in descending graded-lexicographic
order; coefficients are gmpy2 rationals and never zero.  Two mathematically
equal polynomials therefore have identical representations.

Square-root symbols are reduced on construction: any power w^k with k >= 2
of a sqrt symbol w is rewritten using w^2 = radicand(w), so every stored
monomial is at most linear in each sqrt symbol.
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping

from gmpy2 import mpq, mpz

from .symbols import Symbol, SymbolKind

Monomial = tuple  # tuple[tuple[Symbol, int], ...]

_ONE: Monomial = ()


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1.key == s2.key:
            out.append((s1, e1 + e2))
            i += 1
            j += 1
        elif s1.key < s2.key:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_div(m1: Monomial, m2: Monomial) -> Monomial | None:
    """m1 / m2, or None when m2 does not divide m1."""
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while j < n2:
        if i >= n1:
            return None
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1.key == s2.key:
            if e1 < e2:
                return None
            if e1 > e2:
                out.append((s1, e1 - e2))
            i += 1
            j += 1
        elif s1.key < s2.key:
            out.append(m1[i])
            i += 1
        else:
            return None
    out.extend(m1[i:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_cmp(m1: Monomial, m2: Monomial) -> int:
    """Graded-lex: higher total degree wins, ties broken lexicographically
    on the fixed symbol order (larger exponent on an earlier symbol wins)."""
    d1, d2 = mono_degree(m1), mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1.key == s2.key:
            if e1 != e2:
                return -1 if e1 < e2 else 1
            i += 1
            j += 1
        elif s1.key < s2.key:
            return 1
        else:
            return -1
    if i < n1:
        return 1
    if j < n2:
        return -1
    return 0


_mono_key = functools.cmp_to_key(mono_cmp)


def _reduce_sqrts(d: dict) -> dict:
    """Rewrite w^k (k >= 2) for sqrt symbols w via w^2 = radicand."""
    while True:
        pending = None
        for mono in d:
            for s, e in mono:
                if s.kind == SymbolKind.SQRT and e >= 2:
                    pending = (mono, s, e)
                    break
            if pending:
                break
        if pending is None:
            return d
        mono, s, e = pending
        coeff = d.pop(mono)
        q, r = divmod(e, 2)
        rest = tuple((t, k) for t, k in mono if t is not s)
        if r:
            rest = mono_mul(rest, ((s, 1),))
        rad_pow = s.radicand ** q  # Poly
        for m2, c2 in rad_pow.terms:
            key = mono_mul(rest, m2)
            c = d.get(key, 0) + coeff * c2
            if c:
                d[key] = c
            elif key in d:
                del d[key]


class Poly:
    __slots__ = ("terms", "_hash", "_symbols")

    def __init__(self, terms, _normalized: bool = False):
        if _normalized:
            self.terms = terms
        else:
            d = {}
            for mono, c in terms:
                c = mpq(c)
                if not c:
                    continue
                cur = d.get(mono, 0) + c
                if cur:
                    d[mono] = cur
                elif mono in d:
                    del d[mono]
            if any(
                s.kind == SymbolKind.SQRT and e >= 2 for mono in d for s, e in mono
            ):
                d = _reduce_sqrts(d)
                d = {m: c for m, c in d.items() if c}
            self.terms = tuple(
                (m, d[m]) for m in sorted(d, key=_mono_key, reverse=True)
            )
        self._hash = None
        self._symbols = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def const(c) -> "Poly":
        c = mpq(c)
        if not c:
            return _ZERO
        return Poly(((_ONE, c),), _normalized=True)

    @staticmethod
    def sym(s: Symbol, e: int = 1) -> "Poly":
        if e == 0:
            return _ONE_POLY
        return Poly(((((s, e),), mpq(1)),), _normalized=True)

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def const_value(self) -> mpq:
        if not self.terms:
            return mpq(0)
        if len(self.terms) == 1 and not self.terms[0][0]:
            return self.terms[0][1]
        raise ValueError("not a constant polynomial")

    def symbols(self) -> tuple:
        if self._symbols is None:
            seen = {}
            for m, _ in self.terms:
                for s, _e in m:
                    seen[s] = None
            self._symbols = tuple(sorted(seen, key=lambda s: s.key))
        return self._symbols

    def degree(self, s: Symbol) -> int:
        d = 0
        for m, _ in self.terms:
            for t, e in m:
                if t is s or t == s:
                    if e > d:
                        d = e
                    break
        return d

    def total_degree(self) -> int:
        return max((mono_degree(m) for m, _ in self.terms), default=0)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        d = dict(self.terms)
        for m, c in other.terms:
            cur = d.get(m, 0) + c
            if cur:
                d[m] = cur
            elif m in d:
                del d[m]
        return _from_clean_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple((m, -c) for m, c in self.terms), _normalized=True)

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        if other.is_const():
            c0 = other.const_value()
            return Poly(tuple((m, c * c0) for m, c in self.terms), _normalized=True)
        if self.is_const():
            c0 = self.const_value()
            return Poly(tuple((m, c * c0) for m, c in other.terms), _normalized=True)
        d = {}
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        for m1, c1 in small:
            for m2, c2 in big:
                key = mono_mul(m1, m2)
                cur = d.get(key, 0) + c1 * c2
                if cur:
                    d[key] = cur
                elif key in d:
                    del d[key]
        if any(s.kind == SymbolKind.SQRT and e >= 2 for m in d for s, e in m):
            d = _reduce_sqrts(d)
            d = {m: c for m, c in d.items() if c}
        return _from_clean_dict(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, type(mpq(0)))):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        from .printer import poly_str

        return poly_str(self)

    # -- structure ----------------------------------------------------------

    def leading_coeff(self) -> mpq:
        """Coefficient of the graded-lex leading term."""
        return self.terms[0][1] if self.terms else mpq(0)

    def coeff_of(self, s: Symbol, e: int) -> "Poly":
        """Coefficient of s^e, a polynomial in the remaining symbols."""
        out = []
        for m, c in self.terms:
            me = 0
            rest = m
            for i, (t, k) in enumerate(m):
                if t == s:
                    me = k
                    rest = m[:i] + m[i + 1 :]
                    break
            if me == e:
                out.append((rest, c))
        return Poly(tuple(out))

    def as_univariate(self, s: Symbol) -> list:
        """Dense coefficient list [c0, c1, ...] w.r.t. s, entries Poly."""
        n = self.degree(s)
        buckets: list[dict] = [dict() for _ in range(n + 1)]
        for m, c in self.terms:
            me = 0
            rest = m
            for i, (t, k) in enumerate(m):
                if t == s:
                    me = k
                    rest = m[:i] + m[i + 1 :]
                    break
            buckets[me][rest] = buckets[me].get(rest, 0) + c
        return [_from_clean_dict({m: c for m, c in b.items() if c}) for b in buckets]

    @staticmethod
    def from_univariate(s: Symbol, coeffs: Iterable["Poly"]) -> "Poly":
        terms = []
        for e, p in enumerate(coeffs):
            if p is None or p.is_zero():
                continue
            mono_s = ((s, e),) if e else _ONE
            for m, c in p.terms:
                terms.append((mono_mul(m, mono_s), c))
        return Poly(tuple(terms))

    def mul_term(self, mono: Monomial, coeff) -> "Poly":
        coeff = mpq(coeff)
        if not coeff or not self.terms:
            return _ZERO
        terms = tuple((mono_mul(m, mono), c * coeff) for m, c in self.terms)
        return Poly(terms)

    # -- content and normalization ------------------------------------------

    def rational_content(self) -> mpq:
        """Positive rational c with self/c integer-primitive; sign chosen so
        the leading coefficient of self/c is positive.  Zero poly -> 0."""
        if not self.terms:
            return mpq(0)
        num_gcd = mpz(0)
        den_lcm = mpz(1)
        for _, c in self.terms:
            num_gcd = _gcd_int(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // _gcd_int(den_lcm, c.denominator)
        c = mpq(num_gcd, den_lcm)
        if self.terms[0][1] < 0:
            c = -c
        return c

    def primitive(self) -> tuple:
        """(content, primitive part); primitive part has integer coprime
        coefficients and positive leading coefficient."""
        c = self.rational_content()
        if not c:
            return mpq(0), self
        inv = 1 / c
        return c, Poly(tuple((m, q * inv) for m, q in self.terms), _normalized=True)

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term."""
        if not self.terms:
            return _ONE
        common = dict(self.terms[0][0])
        for m, _ in self.terms[1:]:
            if not common:
                break
            cur = dict(m)
            for s in list(common):
                e = cur.get(s, 0)
                if e == 0:
                    del common[s]
                elif e < common[s]:
                    common[s] = e
        return tuple(sorted(common.items(), key=lambda kv: kv[0].key))

    def div_mono(self, mono: Monomial) -> "Poly":
        if not mono:
            return self
        out = []
        for m, c in self.terms:
            q = mono_div(m, mono)
            if q is None:
                raise ValueError("monomial does not divide all terms")
            out.append((q, c))
        return Poly(tuple(out), _normalized=True)

    def divexact(self, other: "Poly") -> "Poly | None":
        """Exact division in Q[symbols]; None when not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_const():
            inv = 1 / other.const_value()
            return Poly(tuple((m, c * inv) for m, c in self.terms), _normalized=True)
        rem = dict(self.terms)
        lead_m, lead_c = other.terms[0]
        quo = {}
        # cancel leading terms in graded-lex order
        while rem:
            m = max(rem, key=_mono_key)
            c = rem[m]
            qm = mono_div(m, lead_m)
            if qm is None:
                return None
            qc = c / lead_c
            quo[qm] = quo.get(qm, 0) + qc
            for m2, c2 in other.terms:
                key = mono_mul(qm, m2)
                cur = rem.get(key, 0) - qc * c2
                if cur:
                    rem[key] = cur
                elif key in rem:
                    del rem[key]
        return _from_clean_dict(quo)

    # -- evaluation / substitution -------------------------------------------

    def subs_values(self, values: Mapping[Symbol, mpq]) -> "Poly":
        """Substitute rational values for a subset of symbols."""
        out = {}
        for m, c in self.terms:
            rest = []
            for s, e in m:
                v = values.get(s)
                if v is None:
                    rest.append((s, e))
                else:
                    c = c * v**e
            if not c:
                continue
            key = tuple(rest)
            cur = out.get(key, 0) + c
            if cur:
                out[key] = cur
            elif key in out:
                del out[key]
        if any(s.kind == SymbolKind.SQRT and e >= 2 for m in out for s, e in m):
            out = _reduce_sqrts(out)
            out = {m: c for m, c in out.items() if c}
        return _from_clean_dict(out)

    def rename(self, mapping: Mapping[Symbol, Symbol]) -> "Poly":
        """Substitute symbols for symbols."""
        out = []
        for m, c in self.terms:
            m2 = tuple(
                sorted(((mapping.get(s, s), e) for s, e in m), key=lambda kv: kv[0].key)
            )
            out.append((m2, c))
        return Poly(tuple(out))


def _coerce(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, type(mpq(0)), type(mpz(0)))):
        return Poly.const(x)
    return None


def _from_clean_dict(d: dict) -> Poly:
    return Poly(
        tuple((m, d[m]) for m in sorted(d, key=_mono_key, reverse=True)),
        _normalized=True,
    )


def _gcd_int(a, b):
    import gmpy2

    return gmpy2.gcd(mpz(a), mpz(b))


_ZERO = Poly((), _normalized=True)
_ONE_POLY = Poly(((_ONE, mpq(1)),), _normalized=True)
