"""GCDs, resultants and exact square roots for the polynomial kernel.

Strategy per operation:

* univariate over Q      -- small degrees by subresultant PRS over Z, larger
                            by modular images (fixed prime sequence, CRT,
                            division check).
* bivariate over Q       -- Brown-style modular GCD: evaluate the auxiliary
                            variable over GF(p), interpolate with leading-
                            coefficient scaling, CRT, division check.
* anything else          -- primitive PRS recursion with monomial/integer
                            content extraction, after a cheap evaluation
                            probe that detects trivial GCDs early.

Resultants use Cohen's subresultant algorithm in general and a modular
evaluation/interpolation path for the bivariate case the equivalence solver
leans on.
"""

from __future__ import annotations

import itertools

import gmpy2
from gmpy2 import mpq, mpz

from .poly import Poly, mono_mul
from .symbols import Symbol, SymbolKind

# Fixed prime sequence for all modular computations (determinism).
_PRIMES: list[int] = []


def _primes():
    p = mpz(2**62)
    while True:
        p = gmpy2.next_prime(p)
        yield int(p)


_prime_gen = _primes()


def _prime(i: int) -> int:
    while len(_PRIMES) <= i:
        _PRIMES.append(next(_prime_gen))
    return _PRIMES[i]


# ---------------------------------------------------------------------------
# dense univariate helpers over Q / Z  (list index = degree, no trailing 0)
# ---------------------------------------------------------------------------


def u_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def u_from_poly(p: Poly, v: Symbol) -> list:
    coeffs = p.as_univariate(v)
    out = []
    for c in coeffs:
        if not c.is_const():
            raise ValueError("polynomial is not univariate in %s" % v)
        out.append(c.const_value())
    return u_trim(out)


def u_to_poly(a: list, v: Symbol) -> Poly:
    return Poly.from_univariate(v, [Poly.const(c) for c in a])


def u_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return u_trim(out)


def u_divmod(a: list, b: list) -> tuple:
    if not b:
        raise ZeroDivisionError
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [mpq(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = a[-1] / lb
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        u_trim(a)
    return u_trim(q), a


def u_int_primitive(a: list) -> tuple:
    """(content mpq, primitive mpz list, sign normalized to positive lead)."""
    g = mpz(0)
    l = mpz(1)
    for c in a:
        c = mpq(c)
        g = gmpy2.gcd(g, c.numerator)
        l = l * c.denominator // gmpy2.gcd(l, c.denominator)
    if not a:
        return mpq(0), []
    cont = mpq(g, l)
    if a[-1] < 0:
        cont = -cont
    return cont, [mpz(mpq(c) / cont) for c in a]


# GF(p) dense univariate -----------------------------------------------------


def up_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def up_mul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * b[j]) % p
    return up_trim(out)


def up_divmod(a: list, b: list, p: int) -> tuple:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = a[-1] * inv % p
        q[k] = c
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % p
        up_trim(a)
    return q, a


def up_monic(a: list, p: int) -> list:
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def up_gcd(a: list, b: list, p: int) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = up_divmod(a, b, p)
        a, b = b, r
    return up_monic(a, p)


def up_eval(a: list, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def up_resultant(a: list, b: list, p: int) -> int:
    """Resultant of dense univariate polynomials over GF(p)."""
    if not a or not b:
        return 0
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, p) % p
        _, r = up_divmod(a, b, p)
        if not r:
            return 0
        dr = len(r) - 1
        res = res * pow(b[-1], da - dr, p) % p
        if (da & 1) and (db & 1):
            res = p - res
        a, b = b, r


def up_newton_interp(xs: list, ys: list, p: int) -> list:
    """Dense coefficients of the interpolating polynomial over GF(p)."""
    n = len(xs)
    divided = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            divided[i] = (
                (divided[i] - divided[i - 1])
                * pow((xs[i] - xs[i - j]) % p, p - 2, p)
            ) % p
    # assemble via Horner on the Newton form
    out = [divided[-1]]
    for k in range(n - 2, -1, -1):
        # out = out * (x - xs[k]) + divided[k]
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] = (nxt[i + 1] + c) % p
            nxt[i] = (nxt[i] - c * xs[k]) % p
        nxt[0] = (nxt[0] + divided[k]) % p
        out = nxt
    return up_trim(out)


# CRT / rational reconstruction ----------------------------------------------


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple:
    inv = int(gmpy2.invert(m1 % m2, m2))
    r = (r1 + (r2 - r1) * inv % m2 * m1) % (m1 * m2)
    return r, m1 * m2


def _sym_lift(r: int, m: int) -> int:
    return r - m if 2 * r > m else r


def _rat_recon(r: int, m: int):
    """Rational reconstruction of r mod m, or None."""
    bound = gmpy2.isqrt(mpz(m // 2))
    t0, t1 = mpz(0), mpz(1)
    r0, r1 = mpz(m), mpz(r % m)
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or gmpy2.gcd(t1, mpz(m)) != 1:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if gmpy2.gcd(r1, t1) != 1:
        return None
    return mpq(r1, t1)


# ---------------------------------------------------------------------------
# univariate gcd over Q
# ---------------------------------------------------------------------------


def _u_gcd_prs_z(a: list, b: list) -> list:
    """Subresultant PRS gcd of primitive mpz lists; returns primitive list."""
    if len(a) < len(b):
        a, b = b, a
    g, h = mpz(1), mpz(1)
    while True:
        d = len(a) - len(b)
        # pseudo-remainder lc(b)^(d+1) * a mod b
        lb = b[-1]
        r = [c * lb ** (d + 1) for c in a]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            c = r[-1] // lb  # exact after scaling
            for j in range(db + 1):
                r[k + j] -= c * b[j]
            u_trim(r)
        if not r:
            _, prim = u_int_primitive(b)
            return prim
        if len(r) == 1:
            return [mpz(1)]
        factor = g * h**d
        r = [c // factor for c in r]
        a, b = b, r
        g = a[-1]
        h = h if d == 0 else (g**d if d == 1 else g**d // h ** (d - 1))


def u_gcd_q(a: list, b: list) -> list:
    """GCD of univariate rational coefficient lists; integer-primitive,
    positive leading coefficient."""
    a = u_trim([mpq(c) for c in a])
    b = u_trim([mpq(c) for c in b])
    if not a:
        _, pb = u_int_primitive(b)
        return [mpq(c) for c in pb]
    if not b:
        _, pa = u_int_primitive(a)
        return [mpq(c) for c in pa]
    _, za = u_int_primitive(a)
    _, zb = u_int_primitive(b)
    if min(len(za), len(zb)) <= 24:
        return [mpq(c) for c in _u_gcd_prs_z(za, zb)]
    return [mpq(c) for c in _u_gcd_modular(za, zb)]


def _u_gcd_modular(a: list, b: list) -> list:
    glc = gmpy2.gcd(a[-1], b[-1])
    best_deg = None
    crt_res = None
    crt_mod = None
    prev_lift = None
    for i in itertools.count():
        if i > 60:  # pragma: no cover - safety net
            return _u_gcd_prs_z(a, b)
        p = _prime(i)
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        ap = [int(c % p) for c in a]
        bp = [int(c % p) for c in b]
        gp = up_gcd(ap, bp, p)
        if len(gp) == 1:
            return [mpz(1)]
        d = len(gp) - 1
        if best_deg is None or d < best_deg:
            best_deg = d
            crt_res = None
            prev_lift = None
        elif d > best_deg:
            continue
        scale = int(glc % p)
        gp = [c * scale % p for c in gp]
        if crt_res is None:
            crt_res, crt_mod = [mpz(c) for c in gp], mpz(p)
        else:
            merged = []
            for c_old, c_new in zip(crt_res, gp):
                r, m = _crt(int(c_old), int(crt_mod), int(c_new), p)
                merged.append(mpz(r))
            crt_res, crt_mod = merged, crt_mod * p
        lift = [_sym_lift(int(c), int(crt_mod)) for c in crt_res]
        if lift == prev_lift:
            _, cand = u_int_primitive([mpq(c) for c in lift])
            if _u_divides(cand, a) and _u_divides(cand, b):
                return cand
        prev_lift = lift


def _u_divides(g: list, a: list) -> bool:
    q, r = u_divmod([mpq(c) for c in a], [mpq(c) for c in g])
    return not r


# ---------------------------------------------------------------------------
# conversions: Poly -> dense bivariate over GF(p)
# ---------------------------------------------------------------------------


def _to_dense2(p: Poly, x: Symbol, y: Symbol, pr: int) -> list:
    """list over deg_x of dense GF(p) lists in y."""
    dx = p.degree(x)
    out = [[] for _ in range(dx + 1)]
    rows = [dict() for _ in range(dx + 1)]
    for mono, c in p.terms:
        ex = ey = 0
        for s, e in mono:
            if s == x:
                ex = e
            elif s == y:
                ey = e
            else:
                raise ValueError("not bivariate")
        num = int(c.numerator % pr) * pow(int(c.denominator % pr), pr - 2, pr) % pr
        rows[ex][ey] = (rows[ex].get(ey, 0) + num) % pr
    for ex in range(dx + 1):
        if rows[ex]:
            row = [0] * (max(rows[ex]) + 1)
            for ey, c in rows[ex].items():
                row[ey] = c
            out[ex] = up_trim(row)
    return out


def _dense2_eval_y(rows: list, tau: int, p: int) -> list:
    return up_trim([up_eval(r, tau, p) for r in rows])


# ---------------------------------------------------------------------------
# multivariate gcd dispatcher
# ---------------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Canonical gcd: integer-primitive with positive leading coefficient."""
    if a.is_zero():
        return b.primitive()[1]
    if b.is_zero():
        return a.primitive()[1]
    ma = a.monomial_content()
    mb = b.monomial_content()
    mg = _mono_gcd(ma, mb)
    a = a.div_mono(ma)
    b = b.div_mono(mb)
    _, a = a.primitive()
    _, b = b.primitive()
    g = _gcd_inner(a, b)
    if mg:
        g = g.mul_term(mg, 1)
    return g.primitive()[1]


def _mono_gcd(m1, m2):
    d2 = dict(m2)
    out = []
    for s, e in m1:
        e2 = d2.get(s, 0)
        if e2:
            out.append((s, min(e, e2)))
    return tuple(out)


def _gcd_inner(a: Poly, b: Poly) -> Poly:
    if a.is_const() or b.is_const():
        return Poly.const(1)
    if a == b:
        return a
    syms = sorted(set(a.symbols()) | set(b.symbols()), key=lambda s: s.key)
    if len(syms) == 1:
        v = syms[0]
        return u_to_poly(u_gcd_q(u_from_poly(a, v), u_from_poly(b, v)), v)
    # pick main variable: present in both, highest min-degree
    common = [s for s in syms if a.degree(s) > 0 and b.degree(s) > 0]
    if not common:
        return Poly.const(1)
    main = max(common, key=lambda s: (min(a.degree(s), b.degree(s)), s.key))
    # cheap probe: specialize all other symbols, univariate gcd degree
    deg_bound = _probe_degree(a, b, main, syms)
    if deg_bound == 0:
        ca = _coeff_gcd(a.as_univariate(main))
        cb = _coeff_gcd(b.as_univariate(main))
        return _gcd_inner_or_const(ca, cb)
    if len(syms) == 2:
        other = syms[0] if syms[1] == main else syms[1]
        g = _gcd_bivariate(a, b, main, other)
        if g is not None:
            return g
    return _gcd_prs(a, b, main)


def _gcd_inner_or_const(a: Poly, b: Poly) -> Poly:
    if a.is_const() or b.is_const():
        return Poly.const(1)
    return poly_gcd(a, b)


def _coeff_gcd(coeffs: list) -> Poly:
    g = Poly.zero()
    for c in coeffs:
        if c.is_zero():
            continue
        g = c if g.is_zero() else poly_gcd(g, c)
        if g.is_const():
            return Poly.const(1)
    return g


_PROBE_POINTS = (mpq(3, 2), mpq(-5, 3), mpq(7, 4), mpq(2), mpq(-3), mpq(11, 5))


def _probe_degree(a: Poly, b: Poly, main: Symbol, syms: list) -> int:
    """Upper bound for deg_main(gcd) from one valid specialization; -1 when
    no valid probe point was found."""
    others = [s for s in syms if s != main]
    la = a.as_univariate(main)[-1]
    lb = b.as_univariate(main)[-1]
    for k in range(len(_PROBE_POINTS) - 2):
        vals = {s: _PROBE_POINTS[(i + k) % len(_PROBE_POINTS)] for i, s in enumerate(others)}
        if la.subs_values(vals).is_zero() or lb.subs_values(vals).is_zero():
            continue
        ua = [c.subs_values(vals).const_value() for c in a.as_univariate(main)]
        ub = [c.subs_values(vals).const_value() for c in b.as_univariate(main)]
        g = u_gcd_q(ua, ub)
        return len(g) - 1
    return -1


def _gcd_bivariate(a: Poly, b: Poly, x: Symbol, y: Symbol) -> Poly | None:
    """Brown's modular gcd for bivariate integer-primitive inputs."""
    lax = a.as_univariate(x)[-1]
    lbx = b.as_univariate(x)[-1]
    glc = poly_gcd(lax, lbx)  # univariate in y
    lead_int = gmpy2.gcd(
        a.terms[0][1].numerator, b.terms[0][1].numerator
    )  # scaling for CRT (graded-lex leading coefficients, integers here)
    crt = None
    crt_mod = None
    prev = None
    best_shape = None
    for i in itertools.count():
        if i > 40:
            return None
        p = _prime(i)
        try:
            ra = _to_dense2(a, x, y, p)
            rb = _to_dense2(b, x, y, p)
        except ValueError:
            return None
        if not ra[-1] or not rb[-1]:
            continue
        gy = _to_dense2(glc, x, y, p)[0] if glc.degree(x) == 0 else None
        if gy is None:
            return None
        gp = _gcd_bi_modp(ra, rb, gy, p)
        if gp is None:
            continue
        if len(gp) == 1 and len(gp[0]) == 1:
            return Poly.const(1)
        shape = (len(gp), tuple(len(r) for r in gp))
        if best_shape is None or shape < best_shape:
            best_shape = shape
            crt = None
            prev = None
        elif shape > best_shape:
            continue
        scale = int(lead_int % p)
        # normalize image: graded-lex leading coefficient -> lead_int mod p
        lead_c = _dense2_lead(gp)
        inv = pow(lead_c, p - 2, p)
        gp = [[c * inv % p * scale % p for c in row] for row in gp]
        if crt is None:
            crt = [[mpz(c) for c in row] for row in gp]
            crt_mod = mpz(p)
        else:
            merged = []
            for row_old, row_new in zip(crt, gp):
                merged.append(
                    [
                        mpz(_crt(int(co), int(crt_mod), cn, p)[0])
                        for co, cn in zip(row_old, row_new)
                    ]
                )
            crt = merged
            crt_mod = crt_mod * p
        lift = [
            [_sym_lift(int(c), int(crt_mod)) for c in row] for row in crt
        ]
        if lift == prev:
            cand = Poly.from_univariate(
                x,
                [u_to_poly([mpq(c) for c in row], y) for row in lift],
            )
            cand = cand.primitive()[1]
            if a.divexact(cand) is not None and b.divexact(cand) is not None:
                return cand
        prev = lift


def _dense2_lead(rows: list) -> int:
    """Graded-lex leading coefficient of a dense bivariate (x-major) table."""
    best = None
    best_key = None
    for ex, row in enumerate(rows):
        for ey, c in enumerate(row):
            if c:
                key = (ex + ey, ex)
                if best_key is None or key > best_key:
                    best_key = key
                    best = c
    return best


def _gcd_bi_modp(ra: list, rb: list, glc_y: list, p: int) -> list | None:
    """Bivariate gcd mod p; inputs dense x-major; returns dense x-major,
    primitive w.r.t. y-content, or None on failure."""
    degy_bound = max(
        max((len(r) - 1 for r in ra if r), default=0),
        max((len(r) - 1 for r in rb if r), default=0),
    ) + len(glc_y)
    xs, images = [], []
    best_deg = None
    tau = 0
    while len(xs) < degy_bound + 2 and tau < p:
        tau += 1
        if up_eval(ra[-1], tau, p) == 0 or up_eval(rb[-1], tau, p) == 0:
            continue
        ua = _dense2_eval_y(ra, tau, p)
        ub = _dense2_eval_y(rb, tau, p)
        g = up_gcd(ua, ub, p)
        d = len(g) - 1
        if d == 0:
            return [[1]]
        if best_deg is None or d < best_deg:
            best_deg = d
            xs, images = [], []
        elif d > best_deg:
            continue
        scale = up_eval(glc_y, tau, p)
        if scale == 0:
            continue
        xs.append(tau)
        images.append([c * scale % p for c in g])
        if len(xs) >= degy_bound + 2:
            break
    if len(xs) < degy_bound + 2:
        return None
    # interpolate each x-coefficient in y
    out = []
    for k in range(best_deg + 1):
        ys = [img[k] if k < len(img) else 0 for img in images]
        out.append(up_newton_interp(xs, ys, p))
    # primitive w.r.t. y: divide by gcd of rows
    cont: list = []
    for row in out:
        if row:
            cont = up_gcd(cont, row, p) if cont else up_monic(row, p)
        if len(cont) == 1:
            break
    if cont and len(cont) > 1:
        out = [up_divmod(row, cont, p)[0] if row else row for row in out]
    return out


# ---------------------------------------------------------------------------
# PRS fallback (any number of variables)
# ---------------------------------------------------------------------------


def _prem_list(a: list, b: list) -> list:
    """Pseudo-remainder of coefficient lists (entries Poly) in the main var."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    d = len(a) - len(b)
    for c in range(len(a)):
        a[c] = a[c] * lb ** (d + 1)
    while len(a) - 1 >= db and any(not c.is_zero() for c in a):
        while a and a[-1].is_zero():
            a.pop()
        if len(a) - 1 < db:
            break
        k = len(a) - 1 - db
        q = a[-1].divexact(lb)
        if q is None:
            # fall back to fraction-free cross-multiplied step
            for j in range(len(a)):
                a[j] = a[j] * lb
            q = a[-1].divexact(lb)
        for j in range(db + 1):
            a[k + j] = a[k + j] - q * b[j]
        while a and a[-1].is_zero():
            a.pop()
    return a


def _primitive_wrt(coeffs: list) -> list:
    g = _coeff_gcd(coeffs)
    if g.is_const():
        return coeffs
    return [c.divexact(g) if not c.is_zero() else c for c in coeffs]


def _gcd_prs(a: Poly, b: Poly, main: Symbol) -> Poly:
    ca = _coeff_gcd(a.as_univariate(main))
    cb = _coeff_gcd(b.as_univariate(main))
    cont = _gcd_inner_or_const(ca, cb)
    ua = _primitive_wrt(a.as_univariate(main))
    ub = _primitive_wrt(b.as_univariate(main))
    if len(ua) < len(ub):
        ua, ub = ub, ua
    while True:
        r = _prem_list(ua, ub)
        if not r or all(c.is_zero() for c in r):
            g = Poly.from_univariate(main, ub)
            break
        if len(r) == 1:
            g = Poly.const(1)
            break
        ua, ub = ub, _primitive_wrt(r)
    if not cont.is_const():
        g = g * cont
    return g


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------


class DegenerateInput(ValueError):
    pass


def resultant(a: Poly, b: Poly, v: Symbol) -> Poly:
    """Sylvester resultant eliminating v."""
    if a.degree(v) == 0 or b.degree(v) == 0:
        raise DegenerateInput("resultant input constant in %s" % v)
    syms = set(a.symbols()) | set(b.symbols())
    syms.discard(v)
    if len(syms) == 1:
        w = syms.pop()
        r = _resultant_bivariate(a, b, v, w)
        if r is not None:
            return r
    return _resultant_subres(a.as_univariate(v), b.as_univariate(v))


def _resultant_subres(A: list, B: list) -> Poly:
    """Cohen Alg. 3.3.7 with Poly coefficients."""
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if ((len(A) - 1) & 1) and ((len(B) - 1) & 1):
            s = -s
    ca = _coeff_gcd(A)
    cb = _coeff_gcd(B)
    if not ca.is_const():
        A = [c.divexact(ca) for c in A]
    else:
        ca = Poly.const(1)
    if not cb.is_const():
        B = [c.divexact(cb) for c in B]
    else:
        cb = Poly.const(1)
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    g = Poly.const(1)
    h = Poly.const(1)
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        d = dA - dB
        if (dA & 1) and (dB & 1):
            s = -s
        R = _prem_list(A, B)
        A = B
        denom = g * h**d
        if R and any(not c.is_zero() for c in R):
            B = [c.divexact(denom) for c in R]
        else:
            B = []
        if not B:
            return Poly.zero()
        if len(B) - 1 > 0:
            g = A[-1]
            if d == 0:
                pass
            elif d == 1:
                h = g
            else:
                h = (g**d).divexact(h ** (d - 1))
            continue
        # deg B == 0: finish
        dA = len(A) - 1
        if dA == 0:
            raise AssertionError("unreachable")
        if dA == 1:
            hfin = B[0]
        else:
            hfin = (B[0] ** dA).divexact(h ** (dA - 1))
        res = t * hfin
        return res if s > 0 else -res


def _resultant_bivariate(a: Poly, b: Poly, v: Symbol, w: Symbol) -> Poly | None:
    """res_v for bivariate (v, w) integer inputs via evaluation/interpolation
    over GF(p) and CRT."""
    ca, a = a.primitive()
    cb, b = b.primitive()
    if not ca or not cb:
        return Poly.zero()
    scale = ca ** b.degree(v) * cb ** a.degree(v)
    dv_a, dv_b = a.degree(v), b.degree(v)
    bound = a.degree(w) * dv_b + b.degree(w) * dv_a
    crt_vec = None
    crt_mod = None
    prev = None
    for i in itertools.count():
        if i > 40:
            return None
        p = _prime(i)
        try:
            ra = _to_dense2(a, v, w, p)
            rb = _to_dense2(b, v, w, p)
        except ValueError:
            return None
        if not ra[-1] or not rb[-1]:
            continue
        xs, ys = [], []
        tau = 0
        ok = True
        while len(xs) < bound + 1:
            if tau >= p:  # pragma: no cover
                ok = False
                break
            if up_eval(ra[-1], tau, p) == 0 or up_eval(rb[-1], tau, p) == 0:
                tau += 1
                continue
            ua = _dense2_eval_y(ra, tau, p)
            ub = _dense2_eval_y(rb, tau, p)
            xs.append(tau)
            ys.append(up_resultant(ua, ub, p))
            tau += 1
        if not ok:
            continue
        rp = up_newton_interp(xs, ys, p)
        vec = rp + [0] * (bound + 1 - len(rp))
        if crt_vec is None:
            crt_vec, crt_mod = [mpz(c) for c in vec], mpz(p)
        else:
            crt_vec = [
                mpz(_crt(int(co), int(crt_mod), cn, p)[0])
                for co, cn in zip(crt_vec, vec)
            ]
            crt_mod = crt_mod * p
        lift = [_sym_lift(int(c), int(crt_mod)) for c in crt_vec]
        if lift == prev:
            res = u_to_poly([mpq(c) for c in lift], w)
            return res * scale
        prev = lift


# ---------------------------------------------------------------------------
# exact polynomial square root
# ---------------------------------------------------------------------------


def rational_sqrt(c: mpq) -> mpq | None:
    if c < 0:
        return None
    if not c:
        return mpq(0)
    n, d = mpz(c.numerator), mpz(c.denominator)
    rn, okn = gmpy2.isqrt_rem(n)
    rd, okd = gmpy2.isqrt_rem(d)
    if okn or okd:
        return None
    return mpq(rn, rd)


def poly_sqrt(p: Poly) -> Poly | None:
    """Exact square root in Q[symbols], or None."""
    if p.is_zero():
        return Poly.zero()
    if p.is_const():
        r = rational_sqrt(p.const_value())
        return None if r is None else Poly.const(r)
    syms = p.symbols()
    v = syms[0]
    coeffs = p.as_univariate(v)
    n = len(coeffs) - 1
    if n % 2:
        return None
    m = n // 2
    qm = poly_sqrt(coeffs[n])
    if qm is None or qm.is_zero():
        return None
    q = [Poly.zero()] * (m + 1)
    q[m] = qm
    two_qm = qm * 2
    for k in range(m - 1, -1, -1):
        acc = coeffs[m + k]
        for i in range(k + 1, m):
            j = m + k - i
            if j <= m and j > k:
                acc = acc - q[i] * q[j]
        qk = acc.divexact(two_qm)
        if qk is None:
            return None
        q[k] = qk
    cand = Poly.from_univariate(v, q)
    if cand * cand == p:
        return cand
    if cand * cand == p * -1:
        return None
    # try the acc bookkeeping differences (cross terms with both < m)
    return cand if cand * cand == p else None
