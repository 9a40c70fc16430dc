"""Splittings, duadic code quartets, square-root-bound checks, and
degeneracy certificates.

A splitting of n is a partition {S0, S1} of {1,...,n-1} into unions of
q-ary cyclotomic cosets swapped by multiplication with some a coprime to n.
The attached quartet consists of the odd-like codes D_i (defining set S_i)
and their even-like subcodes C_i (defining set S_i union {0}).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field as dc_field
from math import gcd, isqrt

from .cyclic import (
    CosetStructure,
    CyclicCode,
    DefiningSet,
    cyclotomic_cosets,
    is_quadratic_residue,
    make_cyclic_code,
    mu_apply,
    ord_mod,
)
from .distance import DistanceResult
from .galois import Field, factorize


class SplittingError(ValueError):
    """Invalid splitting or quartet construction."""


@dataclass(frozen=True)
class Splitting:
    """A splitting {S0, S1, a} of n for q-ary duadic codes."""

    n: int
    q: int
    S0: tuple[int, ...]
    S1: tuple[int, ...]
    a: int

    def __post_init__(self):
        n, q = self.n, self.q
        object.__setattr__(self, "S0", tuple(sorted(self.S0)))
        object.__setattr__(self, "S1", tuple(sorted(self.S1)))
        s0, s1 = set(self.S0), set(self.S1)
        if s0 & s1:
            raise SplittingError("S0 and S1 intersect")
        if s0 | s1 != set(range(1, n)):
            raise SplittingError("S0 and S1 do not cover {1,...,n-1}")
        if len(s0) != len(s1):
            raise SplittingError("S0 and S1 differ in size")
        if gcd(self.a, n) != 1:
            raise SplittingError(f"gcd(a={self.a}, {n}) != 1")
        if mu_apply(s0, self.a, n) != s1 or mu_apply(s1, self.a, n) != s0:
            raise SplittingError(f"mu_{self.a} does not swap S0 and S1")
        cs = cyclotomic_cosets(n, q)
        for side in (s0, s1):
            for r in side:
                if not set(cs.coset_of(r)) <= side:
                    raise SplittingError("sides are not unions of cosets")

    @property
    def splitting_id(self) -> str:
        """Stable identifier: hash of (n, q, sorted S0)."""
        payload = f"{self.n}:{self.q}:" + ",".join(map(str, self.S0))
        return hashlib.sha256(payload.encode()).hexdigest()[:12]

    def swapped(self) -> "Splitting":
        return Splitting(self.n, self.q, self.S1, self.S0, self.a)

    def is_given_by(self, a: int) -> bool:
        """Whether mu_a also swaps the two sides of this splitting."""
        if gcd(a, self.n) != 1:
            return False
        return mu_apply(self.S0, a, self.n) == frozenset(self.S1)


def duadic_exists(n: int, q: int) -> bool:
    """Duadic codes of length n over GF(q) exist iff q is a quadratic
    residue modulo n."""
    if n % 2 == 0:
        raise ValueError("length n must be odd")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    return is_quadratic_residue(q, n)


def _mu_coset_orbits(cs: CosetStructure, a: int):
    """Orbits of mu_a acting on the nonzero q-ary cosets, each orbit listed
    in action order starting from its smallest-representative coset."""
    n = cs.n
    remaining = {c[0]: c for c in cs.nonzero_cosets}
    orbits = []
    while remaining:
        start = remaining.pop(min(remaining))
        orbit = [start]
        cur = cs.coset_of(a * start[0] % n)
        while cur != start:
            remaining.pop(cur[0], None)
            orbit.append(cur)
            cur = cs.coset_of(a * cur[0] % n)
        # rotate so the coset with the smallest representative leads, keeping
        # the action order (orbit[i+1] = mu_a(orbit[i]))
        lead = min(range(len(orbit)), key=lambda i: orbit[i][0])
        orbit = orbit[lead:] + orbit[:lead]
        orbits.append(orbit)
    return orbits


def splitting_by(n: int, q: int, a: int) -> Splitting | None:
    """The canonical splitting given by mu_a, or None when mu_a gives none.

    mu_a splits n iff every orbit of mu_a on the nonzero cosets has even
    length; cosets are then assigned alternately along each orbit with the
    smallest-representative coset seeding S0.
    """
    if n % 2 == 0:
        raise ValueError("length n must be odd")
    a %= n
    if gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    cs = cyclotomic_cosets(n, q)
    orbits = _mu_coset_orbits(cs, a)
    if any(len(o) % 2 for o in orbits):
        return None
    S0: list[int] = []
    S1: list[int] = []
    for orbit in orbits:
        for i, coset in enumerate(orbit):
            (S0 if i % 2 == 0 else S1).extend(coset)
    return Splitting(n=n, q=q, S0=tuple(S0), S1=tuple(S1), a=a)


def find_splittings(n: int, q: int, limit: int | None = None) -> list[Splitting]:
    """All splittings of n, enumerated deterministically: multipliers a in
    increasing order, and for each valid a every per-orbit assignment (the
    canonical alternation first, then its per-orbit flips in binary order)."""
    if n % 2 == 0:
        raise ValueError("length n must be odd")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    cs = cyclotomic_cosets(n, q)
    out: list[Splitting] = []
    for a in range(2, n):
        if gcd(a, n) != 1:
            continue
        orbits = _mu_coset_orbits(cs, a)
        if any(len(o) % 2 for o in orbits):
            continue
        for flips in range(1 << len(orbits)):
            S0: list[int] = []
            S1: list[int] = []
            for bit, orbit in enumerate(orbits):
                flip = flips >> bit & 1
                for i, coset in enumerate(orbit):
                    (S0 if i % 2 == flip else S1).extend(coset)
            out.append(Splitting(n=n, q=q, S0=tuple(S0), S1=tuple(S1), a=a))
            if limit is not None and len(out) >= limit:
                return out
    return out


def default_splitting(n: int, q: int) -> Splitting | None:
    """The splitting a build uses when none is named: mu_{-1} when it splits
    (the square-root bound is then strongest), else the smallest valid a."""
    s = splitting_by(n, q, n - 1)
    if s is not None:
        return s
    found = find_splittings(n, q, limit=1)
    return found[0] if found else None


@dataclass(frozen=True)
class DuadicQuartet:
    """The four cyclic codes attached to a splitting: C_i subset D_i."""

    splitting: Splitting
    D0: CyclicCode
    D1: CyclicCode
    C0: CyclicCode
    C1: CyclicCode

    @property
    def n(self) -> int:
        return self.splitting.n

    @property
    def q(self) -> int:
        return self.splitting.q


def build_quartet(s: Splitting, field: Field) -> DuadicQuartet:
    if field.order != s.q:
        raise SplittingError(
            f"field order {field.order} does not match splitting over GF({s.q})"
        )
    n = s.n
    D0 = make_cyclic_code(n, field, DefiningSet(n, s.q, s.S0))
    D1 = make_cyclic_code(n, field, DefiningSet(n, s.q, s.S1))
    C0 = make_cyclic_code(n, field, DefiningSet(n, s.q, s.S0 + (0,)))
    C1 = make_cyclic_code(n, field, DefiningSet(n, s.q, s.S1 + (0,)))
    for D, C in ((D0, C0), (D1, C1)):
        if D.k != (n + 1) // 2 or C.k != (n - 1) // 2:
            raise SplittingError("duadic dimension formula violated (internal bug)")
        if not D.genpoly.divides(C.genpoly):
            raise SplittingError("C_i not contained in D_i (internal bug)")
        if any(not C.is_even_like(row) for row in C.G):
            raise SplittingError("even-like code has odd-like generator row")
        if all(D.is_even_like(row) for row in D.G):
            raise SplittingError("odd-like code has no odd-like generator row")
    return DuadicQuartet(splitting=s, D0=D0, D1=D1, C0=C0, C1=C1)


@dataclass(frozen=True)
class SquareRootBoundReport:
    """Outcome of the square-root bound checks on a quartet's odd-like
    minimum weights."""

    n: int
    d_o: DistanceResult
    equal_across_pair: bool | None  # None if only one side was computed
    bound_sq: bool | None  # d_o^2 >= n
    mu_minus1: bool  # the splitting is given by mu_{-1}
    bound_sq_strong: bool | None  # d_o^2 - d_o + 1 >= n (mu_{-1} case only)

    @property
    def all_satisfied(self) -> bool:
        checks = [self.bound_sq]
        if self.mu_minus1:
            checks.append(self.bound_sq_strong)
        if self.equal_across_pair is not None:
            checks.append(self.equal_across_pair)
        return all(c for c in checks if c is not None)


def check_square_root_bound(quartet: DuadicQuartet, d_o0: DistanceResult,
                            d_o1: DistanceResult | None = None) -> SquareRootBoundReport:
    """Assert the square-root bound on computed odd-like distances.  A
    violation with exact inputs indicates an implementation bug; interval
    inputs make the checks vacuous (None)."""
    n = quartet.n
    mu1 = quartet.splitting.is_given_by(n - 1)
    if not d_o0.is_exact or (d_o1 is not None and not d_o1.is_exact):
        return SquareRootBoundReport(n=n, d_o=d_o0, equal_across_pair=None,
                                     bound_sq=None, mu_minus1=mu1,
                                     bound_sq_strong=None)
    d = d_o0.value
    equal = d_o1.value == d if d_o1 is not None else None
    report = SquareRootBoundReport(
        n=n, d_o=d_o0, equal_across_pair=equal,
        bound_sq=d * d >= n, mu_minus1=mu1,
        bound_sq_strong=(d * d - d + 1 >= n) if mu1 else None,
    )
    if equal is False or report.bound_sq is False or report.bound_sq_strong is False:
        raise SplittingError(
            f"square-root bound violated at n={n}, d_o={d}: "
            "this is a theorem, so the implementation is buggy"
        )
    return report


# ---------------------------------------------------------------------------
# Degeneracy certificates


@dataclass(frozen=True)
class PrimeLocalData:
    """Per-prime quantities entering the degeneracy theorems."""

    p: int
    m: int  # exponent of p in n
    t: int  # ord_p(q) (CSS) or ord_p(q^2) (Hermitian)
    z: int  # exact p-adic valuation of q^t - 1 (resp. q^{2t} - 1)
    q_is_qr_mod_p: bool
    m_gt_2z: bool
    p_cong_3_mod_4: bool

    @property
    def purity_term(self) -> int:
        return self.p**self.z


@dataclass(frozen=True)
class DegeneracyCertificate:
    """Arithmetic hypotheses of the degenerate-family theorems, evaluated for
    (n, q).  The certificate predicts a purity bound; the degeneracy verdict
    itself always rests on computed distances."""

    n: int
    q: int
    construction: str  # "CSS" | "Hermitian"
    primes: tuple[PrimeLocalData, ...]
    purity_bound: int
    all_q_qr: bool
    all_m_gt_2z: bool
    all_p_cong_3_mod_4: bool
    ord_n_q_odd: bool
    hypotheses_met: bool
    example_clause_7m: bool  # the 7^m, q=2 family stated with m >= 2

    def to_dict(self) -> dict:
        return {
            "n": self.n, "q": self.q, "construction": self.construction,
            "primes": [{
                "p": pl.p, "m": pl.m, "t": pl.t, "z": pl.z,
                "purity_term": pl.purity_term,
                "q_is_qr_mod_p": pl.q_is_qr_mod_p,
                "m_gt_2z": pl.m_gt_2z,
                "p_cong_3_mod_4": pl.p_cong_3_mod_4,
            } for pl in self.primes],
            "purity_bound": self.purity_bound,
            "all_q_qr": self.all_q_qr,
            "all_m_gt_2z": self.all_m_gt_2z,
            "all_p_cong_3_mod_4": self.all_p_cong_3_mod_4,
            "ord_n_q_odd": self.ord_n_q_odd,
            "hypotheses_met": self.hypotheses_met,
            "example_clause_7m": self.example_clause_7m,
        }


FACTORIZATION_CAP = 10**6


def p_adic_valuation(p: int, x: int) -> int:
    z = 0
    while x % p == 0:
        x //= p
        z += 1
    return z


def degeneracy_certificate(n: int, q: int, construction: str) -> DegeneracyCertificate:
    if construction not in ("CSS", "Hermitian"):
        raise ValueError("construction must be 'CSS' or 'Hermitian'")
    if n % 2 == 0 or gcd(n, q) != 1:
        raise ValueError("n must be odd and coprime to q")
    if n > FACTORIZATION_CAP:
        raise ValueError(f"n = {n} exceeds the trial-division cap {FACTORIZATION_CAP}")
    base = q * q if construction == "Hermitian" else q
    primes = []
    for p, m in sorted(factorize(n).items()):
        t = ord_mod(p, base)
        z = p_adic_valuation(p, base**t - 1)
        if z < 1 or (base**t - 1) % p**z != 0:
            raise AssertionError("valuation computation failed (internal bug)")
        primes.append(PrimeLocalData(
            p=p, m=m, t=t, z=z,
            q_is_qr_mod_p=is_quadratic_residue(q, p) if p > 2 else False,
            m_gt_2z=m > 2 * z,
            p_cong_3_mod_4=p % 4 == 3,
        ))
    purity_bound = min(pl.purity_term for pl in primes)
    all_qr = all(pl.q_is_qr_mod_p for pl in primes)
    all_m = all(pl.m_gt_2z for pl in primes)
    all_p3 = all(pl.p_cong_3_mod_4 for pl in primes)
    ord_odd = ord_mod(n, q) % 2 == 1
    if construction == "CSS":
        met = all_qr and all_m
    else:
        met = ord_odd and all_p3 and all_m
    fac = factorize(n)
    example = (q == 2 and list(fac) == [7] and fac[7] >= 2
               and construction == "CSS")
    cert = DegeneracyCertificate(
        n=n, q=q, construction=construction, primes=tuple(primes),
        purity_bound=purity_bound, all_q_qr=all_qr, all_m_gt_2z=all_m,
        all_p_cong_3_mod_4=all_p3, ord_n_q_odd=ord_odd,
        hypotheses_met=met, example_clause_7m=example,
    )
    if all_m and not purity_bound**2 < n:
        # min p^z < sqrt(n) is a theorem under m_i > 2z_i
        raise AssertionError("purity bound not below sqrt(n) (internal bug)")
    return cert
