"""Exact arithmetic in small finite fields GF(p^m).

Elements are represented by their integer index: the base-p digits of the
index are the coefficients of the element in the polynomial basis
(digit i = coefficient of x^i).  With this convention addition is digitwise
mod p (XOR for characteristic 2), and the prime subfield occupies indices
0..p-1.

Fields are canonical and cached: same (p, m) always yields the same modulus,
generator and tables, so golden-value tests are portable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Hard cap on field cardinality; construction beyond this is refused.
FIELD_SIZE_CAP = 1 << 24
# Log/antilog tables are only materialized up to this cardinality; larger
# fields fall back to direct polynomial arithmetic.
TABLE_CAP = 1 << 20


class FieldError(ValueError):
    """Invalid field construction or field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize requires a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (gcd(a, n) must be 1)."""
    a %= n
    t, x = 1, a
    while x != 1:
        x = x * a % n
        t += 1
        if t > n:
            raise ValueError(f"{a} has no order mod {n} (not coprime?)")
    return t


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on plain coefficient lists (lowest degree first).
# Used only during field construction (irreducibility search).


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_rem(res, mod, p)


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        _poly_trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
        _poly_trim(b)
    return a


def _poly_powmod_x(e: int, mod: list[int], p: int) -> list[int]:
    """x^e mod (mod) over GF(p)."""
    result = [1]
    base = _poly_rem([0, 1], mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Degree-m monic poly is irreducible iff it shares no factor with
    x^{p^k} - x for k <= m//2 (no irreducible factor of degree <= m//2)."""
    m = len(mod) - 1
    if m == 1:
        return True
    for k in range(1, m // 2 + 1):
        xpk = _poly_powmod_x(p**k, mod, p)
        # x^{p^k} - x
        diff = list(xpk) + [0] * max(0, 2 - len(xpk))
        diff[1] = (diff[1] - 1) % p
        _poly_trim(diff)
        g = _poly_gcd(mod, diff, p)
        if len(g) > 1:
            return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p),
    ordering coefficient tuples from high degree down.  Returned lowest
    degree first."""
    if m == 1:
        return (0, 1)  # x
    for code in range(p**m):
        # decode (a_{m-1}, ..., a_0) from the integer, high digit first
        digits = []
        c = code
        for _ in range(m):
            digits.append(c % p)
            c //= p
        # digits[0] = a_0 ... digits[m-1] = a_{m-1}
        cand = digits + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------


class Field:
    """A finite field GF(p^m) with canonical modulus and generator.

    Do not instantiate directly; use :func:`make_field` so instances are
    cached and shared.
    """

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        order = p**m
        if order > FIELD_SIZE_CAP:
            raise FieldError(
                f"GF({p}^{m}) has {order} elements, beyond the cap of "
                f"{FIELD_SIZE_CAP}; larger extensions are out of scope"
            )
        self.p = p
        self.m = m
        self.order = order
        self.modulus: tuple[int, ...] = _canonical_modulus(p, m)
        if p == 2:
            self._mod_mask = sum(c << i for i, c in enumerate(self.modulus))
        self.generator = self._find_generator()
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if order <= TABLE_CAP:
            self._build_tables()

    # -- representation helpers

    def _digits(self, a: int) -> list[int]:
        d = []
        for _ in range(self.m):
            d.append(a % self.p)
            a //= self.p
        return d

    def _undigits(self, d: list[int]) -> int:
        a = 0
        for c in reversed(d):
            a = a * self.p + c
        return a

    def element_to_coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coefficients of an element, lowest degree first."""
        self._check(a)
        return tuple(self._digits(a))

    def coeffs_to_element(self, coeffs) -> int:
        d = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(d) > self.m or any(not (0 <= c < self.p) for c in d):
            raise FieldError("coefficient vector does not fit this field")
        return self._undigits(d)

    def _check(self, a: int) -> None:
        if not (0 <= a < self.order):
            raise FieldError(f"{a} is not an element of GF({self.p}^{self.m})")

    # -- raw arithmetic (no tables)

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                b >>= 1
            m = self.m
            while r.bit_length() > m:
                r ^= self._mod_mask << (r.bit_length() - 1 - m)
            return r
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_rem(prod, list(self.modulus), self.p)
        rem += [0] * (self.m - len(rem))
        return self._undigits(rem)

    def _raw_pow(self, a: int, e: int) -> int:
        r, b = 1, a
        while e:
            if e & 1:
                r = self._raw_mul(r, b)
            b = self._raw_mul(b, b)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        target = self.order - 1
        if target == 1:
            return 1
        prime_divs = list(factorize(target))
        for cand in range(1, self.order):
            if all(self._raw_pow(cand, target // r) != 1 for r in prime_divs):
                return cand
        raise FieldError("no generator found (internal error)")

    def _build_tables(self) -> None:
        size = self.order - 1
        exp = [0] * size
        log = [0] * self.order
        x = 1
        for i in range(size):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, self.generator)
        if x != 1:
            raise FieldError("generator order mismatch (internal error)")
        self._exp = exp
        self._log = log

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    # -- public arithmetic

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise FieldError("cannot invert zero")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._raw_pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e == 0:
            return 1
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        return self._raw_pow(a, e)

    def exp(self, i: int) -> int:
        """generator**i (antilog)."""
        if self._exp is not None:
            return self._exp[i % (self.order - 1)]
        return self._raw_pow(self.generator, i % (self.order - 1))

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero is undefined")
        if self._log is None:
            raise FieldError("log tables not materialized for this field")
        return self._log[a]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        t, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            t += 1
        return t

    def elements(self):
        return range(self.order)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((Field, self.p, self.m))


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> Field:
    """Canonical GF(p^m); cached, so repeated calls share tables."""
    return Field(p, m)


def field_from_order(q: int) -> Field:
    """The canonical field with exactly q elements."""
    fac = factorize(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, m), = fac.items()
    return make_field(p, m)


def frobenius(f: Field, x: int, q: int) -> int:
    """The conjugation x -> x^q on GF(q^2) (or any field containing GF(q))."""
    if f.order == q:
        return f.pow(x, q)  # identity on the field itself
    t = 0
    order = f.order
    qq = q
    while qq < order:
        qq *= q
        t += 1
    if qq != order:
        raise FieldError(f"GF(q) with q={q} is not a subfield of {f}")
    return f.pow(x, q)


# ---------------------------------------------------------------------------
# Polynomials over a Field


@dataclass(frozen=True)
class Poly:
    """Polynomial over a Field; coeffs lowest degree first, normalized so the
    leading coefficient is nonzero (the zero polynomial has empty coeffs)."""

    coeffs: tuple[int, ...]
    field: Field

    @staticmethod
    def make(coeffs, field: Field) -> "Poly":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return Poly(tuple(c), field)

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly((), field)

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly((1,), field)

    @staticmethod
    def x_pow(e: int, field: Field) -> "Poly":
        return Poly((0,) * e + (1,), field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldError("polynomials live in different fields")

    def add(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly.make(out, f)

    def scale(self, s: int) -> "Poly":
        f = self.field
        return Poly.make([f.mul(s, c) for c in self.coeffs], f)

    def neg(self) -> "Poly":
        f = self.field
        return Poly(tuple(f.neg(c) for c in self.coeffs), f)

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def mul(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly.make(out, f)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(f), self
        quo = [0] * (dq + 1)
        inv_lead = f.inv(other.coeffs[-1])
        for shift in range(dq, -1, -1):
            lead = rem[shift + other.degree]
            if lead:
                factor = f.mul(lead, inv_lead)
                quo[shift] = factor
                for i, c in enumerate(other.coeffs):
                    rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, c))
        return Poly.make(quo, f), Poly.make(rem, f)

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero()

    def eval(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __str__(self) -> str:
        return " + ".join(
            f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c
        ) or "0"


def primitive_nth_root(n: int, base_q: int) -> tuple[Field, int]:
    """The extension GF(base_q^t), t = ord_n(base_q), together with a
    canonical element of exact multiplicative order n."""
    if n < 1:
        raise FieldError("n must be positive")
    base = field_from_order(base_q)
    if n == 1:
        return base, 1
    from math import gcd

    if gcd(n, base_q) != 1:
        raise FieldError(f"gcd({n}, {base_q}) != 1; no primitive n-th root")
    t = _mult_order(base_q, n)
    ext = make_field(base.p, base.m * t)
    alpha = ext.pow(ext.generator, (ext.order - 1) // n)
    return ext, alpha


def embed_subfield_element(ext: Field, base: Field, a: int) -> int:
    """Map an element of `ext` lying in the subfield of size base.order to
    its index in the canonical `base` field."""
    if base.p != ext.p or ext.m % base.m != 0:
        raise FieldError(f"{base} is not a subfield of {ext}")
    if a == 0:
        return 0
    if a == 1:
        return 1
    if ext.pow(a, base.order) != a:
        raise FieldError(
            f"element {a} of {ext} is not fixed by x -> x^{base.order}"
        )
    if base.m == 1:
        # prime subfield occupies indices 0..p-1 in the polynomial basis
        return a
    step = (ext.order - 1) // (base.order - 1)
    omega = ext.exp(step)
    x = omega
    for k in range(1, base.order):
        if x == a:
            return base.exp(k)
        x = ext.mul(x, omega)
    raise FieldError("subfield embedding failed (internal error)")


def coerce_to_base(poly: Poly, base: Field) -> Poly:
    """Re-express a polynomial whose coefficients all lie in the subfield of
    size base.order as a polynomial over the canonical base field."""
    ext = poly.field
    if ext == base:
        return poly
    coeffs = [embed_subfield_element(ext, base, c) for c in poly.coeffs]
    return Poly.make(coeffs, base)


def embed_into_extension(poly: Poly, ext: Field) -> Poly:
    """Inverse direction of coerce_to_base: lift a base-field polynomial into
    an extension via the canonical subfield embedding."""
    base = poly.field
    if base == ext:
        return poly
    if base.p != ext.p or ext.m % base.m != 0:
        raise FieldError(f"{base} is not a subfield of {ext}")
    if base.m == 1:
        return Poly.make(poly.coeffs, ext)
    step = (ext.order - 1) // (base.order - 1)
    out = []
    for c in poly.coeffs:
        out.append(0 if c == 0 else ext.exp(step * base.log(c)))
    return Poly.make(out, ext)
