"""The semigroup-algebra layer for F_p[S].

Membership is purely support-based: f lies in F_p[S] exactly when every
exponent with a nonzero coefficient belongs to S.  Irreducibility inside
the algebra is decided by scanning divisor pairs drawn from the F_p[x]
factorization; that scan is exhaustive because membership survives exact
division (if g and g*h are members and g(0) != 0, then h is a member
too), so any algebra split is visible among those divisors.

Two code paths coexist: the per-polynomial API works on `Polynomial`
values through `factor_fq`, while bulk degree scans for p = 2 run on raw
bitmasks against a cached smallest-factor table, since enumerating 2^(n-1)
coefficient masks dominates every verification campaign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _gf2
from .ffpoly import FieldSpec, FqFactorization, Polynomial, canonical_key, factor_fq
from .numsgp import NumericalSemigroup, from_generators


@dataclass(frozen=True)
class AlgebraContext:
    """A coefficient field together with the exponent semigroup."""

    field: FieldSpec
    semigroup: NumericalSemigroup

    @property
    def is_friendly(self):
        """True for F_2[x^2,x^3], where the three-way classification applies."""
        return self.field.p == 2 and self.semigroup.min_generators == (2, 3)

    @property
    def gap_mask(self):
        mask = 0
        for g in self.semigroup.gaps:
            mask |= 1 << g
        return mask


@lru_cache(maxsize=None)
def friendly_context():
    """The F_2[x^2,x^3] context used by the classifier."""
    return AlgebraContext(FieldSpec(2), from_generators((2, 3)))


@dataclass(frozen=True)
class FriendlyClass:
    """Classification of an irreducible of F_2[x^2,x^3]: classic, tame, or wild."""

    kind: str
    monomial_power: int | None = None  # 2 or 3, tame only

    def __post_init__(self):
        if self.kind not in ("classic", "tame", "wild"):
            raise ValueError(f"unknown class kind {self.kind!r}")
        if (self.kind == "tame") != (self.monomial_power is not None):
            raise ValueError("monomial_power is set exactly for tame polynomials")
        if self.kind == "tame" and self.monomial_power not in (2, 3):
            raise ValueError("tame monomial power must be 2 or 3")

    def __str__(self):
        if self.kind == "tame":
            return f"tame({self.monomial_power})"
        return self.kind


CLASSIC = FriendlyClass("classic")
WILD = FriendlyClass("wild")


def tame(m):
    return FriendlyClass("tame", m)


@dataclass(frozen=True)
class FactorShape:
    """Shape of a member's F_p[x] factorization: f = x^m * (k irreducibles)."""

    m: int
    k: int


@dataclass(frozen=True)
class AlgebraVerdict:
    """Outcome of the algebra irreducibility test.

    kind is one of "unit", "not_member", "irreducible", "reducible".
    A reducible verdict carries a verified witness pair (g, h) with
    g * h == f and both members of positive degree; an irreducible verdict
    in F_2[x^2,x^3] carries the classification.
    """

    kind: str
    classification: FriendlyClass | None = None
    witness: tuple[Polynomial, Polynomial] | None = None

    @property
    def is_irreducible(self):
        return self.kind == "irreducible"

    @property
    def is_reducible(self):
        return self.kind == "reducible"


def is_member(ctx, f):
    """Support-based membership: every exponent of f lies in S."""
    contains = ctx.semigroup.contains
    return all(contains(i) for i in f.support)


def enumerate_degree(ctx, n):
    """Yield the monic members of degree n in increasing bitmask order.

    Coefficients run over the free positions S & [0, n-1], lowest position
    least significant, which is plain bitmask order for p = 2; the stream
    is empty when n is a gap of S.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not ctx.semigroup.contains(n):
        return
    contains = ctx.semigroup.contains
    free = [i for i in range(n) if contains(i)]
    p = ctx.field.p
    for idx in range(p ** len(free)):
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        t = idx
        for pos in free:
            t, coeffs[pos] = t // p, t % p
        yield Polynomial(ctx.field, tuple(coeffs))


def _divisor_lattice(fac):
    # All monic divisors in mixed-radix order over the exponent vectors;
    # entries i and len-1-i are complementary.
    divs = [Polynomial.one(fac.field)]
    for poly, mult in fac.factors:
        powers = [Polynomial.one(fac.field)]
        for _ in range(mult):
            powers.append(powers[-1] * poly)
        divs = [d * w for w in powers for d in divs]
    return divs


def is_irreducible_in_algebra(ctx, f):
    """Full verdict for f relative to F_p[S], with a witness when reducible.

    Divisors are enumerated from the exponent vectors of factor_fq(f); the
    witness split, when one exists, is the one whose smaller part has the
    least canonical key (bitmask order for p = 2).
    """
    if f.field != ctx.field:
        raise ValueError("polynomial field does not match the context")
    if f.is_zero:
        raise ValueError("the zero polynomial has no verdict")
    if not is_member(ctx, f):
        return AlgebraVerdict("not_member")
    if f.degree == 0:
        return AlgebraVerdict("unit")
    fac = factor_fq(f)
    divs = _divisor_lattice(fac)
    total = len(divs)
    candidates = sorted(range(1, total - 1), key=lambda i: canonical_key(divs[i]))
    unit = Polynomial.constant(ctx.field, fac.unit)
    for i in candidates:
        g = divs[i]
        h = divs[total - 1 - i]
        if is_member(ctx, g) and is_member(ctx, h):
            return AlgebraVerdict("reducible", witness=(g, h * unit))
    classification = _friendly_class_of(fac) if ctx.is_friendly else None
    return AlgebraVerdict("irreducible", classification=classification)


def _shape_of(fac):
    m = 0
    k = 0
    for poly, mult in fac.factors:
        if poly.coeffs == (0, 1):
            m = mult
        else:
            k += mult
    return m, k


def _friendly_class_of(fac):
    # classification of an already-verified irreducible of F_2[x^2,x^3]
    m, k = _shape_of(fac)
    if m == 0 and k == 1:
        return CLASSIC
    if m in (2, 3) and k <= 1:
        return tame(m)
    if m == 0 and k == 2:
        return WILD
    raise ArithmeticError(
        f"factorization shape (m={m}, k={k}) escapes the three-way classification"
    )


def classify_friendly(f):
    """Classic/tame/wild classification in F_2[x^2,x^3].

    Raises unless f is over F_2 and irreducible in the algebra.
    """
    if f.field.p != 2:
        raise ValueError("classification is defined over F_2 only")
    verdict = is_irreducible_in_algebra(friendly_context(), f)
    if verdict.kind == "not_member":
        raise ValueError("polynomial has a term outside <2,3>")
    if not verdict.is_irreducible:
        raise ValueError("polynomial is not irreducible in F_2[x^2,x^3]")
    return verdict.classification


def factorization_shape(ctx, f):
    """(m, k): multiplicity of x and total multiplicity of the other factors."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no factorization shape")
    if not is_member(ctx, f):
        raise ValueError("polynomial is not a member of the algebra")
    m, k = _shape_of(factor_fq(f))
    return FactorShape(m, k)


def find_subproduct(polys, clear_below):
    """Indices of a subproduct with no terms of degree 1 .. clear_below-1.

    Requires at least p^(clear_below-1) polynomials, all over one prime
    field and all with nonzero constant term.  Follows the constructive
    recursion: split into p blocks, recurse at level N-1, normalize the
    constant terms, and take the earliest collision among prefix sums of
    the x^(N-1) coefficients (a zero prefix collides with the empty one).
    Returns 0-based indices, sorted ascending.
    """
    if not polys:
        raise ValueError("at least one polynomial is required")
    field = polys[0].field
    p = field.p
    for f in polys:
        if f.field != field:
            raise ValueError("all polynomials must share one field")
        if f.constant_term == 0:
            raise ValueError("every polynomial must have a nonzero constant term")
    if not isinstance(clear_below, int) or clear_below < 1:
        raise ValueError("the clearing level must be a positive integer")
    if len(polys) < p ** (clear_below - 1):
        raise ValueError(
            f"need at least {p ** (clear_below - 1)} polynomials, got {len(polys)}"
        )

    def solve(indices, n):
        if n == 1:
            i = indices[0]
            return [i], polys[i]
        size = p ** (n - 2)
        blocks = [indices[t * size:(t + 1) * size] for t in range(p)]
        subs = [solve(block, n - 1) for block in blocks]
        seen = {0: 0}
        sigma = 0
        for t in range(1, p + 1):
            chosen, g = subs[t - 1]
            c = g.coeff(n - 1) * pow(g.constant_term, -1, p) % p
            sigma = (sigma + c) % p
            if sigma in seen:
                s = seen[sigma]
                picked = []
                prod = Polynomial.one(field)
                for block_chosen, block_g in subs[s:t]:
                    picked.extend(block_chosen)
                    prod = prod * block_g
                return picked, prod
            seen[sigma] = t
        raise AssertionError("pigeonhole cannot fail over p prefix sums")

    chosen, _ = solve(list(range(p ** (clear_below - 1))), clear_below)
    return tuple(sorted(chosen))


# -- bulk scanning for whole-degree verification -----------------------------


_SPF_TABLE: list[int] = []
_SPF_DEGREE = -1


def prepare_gf2_cache(max_degree):
    """Build (or extend) the smallest-factor table for GF(2) bulk scans.

    The table is filled by marking products of each irreducible with every
    monic cofactor, in increasing mask order, so entry a holds the least
    irreducible factor of a.  Degree scans factor members by repeated
    table lookup, which is several times faster than per-polynomial
    distinct-degree splitting at enumeration scale.
    """
    global _SPF_TABLE, _SPF_DEGREE
    if max_degree <= _SPF_DEGREE:
        return
    limit = 1 << (max_degree + 1)
    spf = [0] * limit
    mul = _gf2.mul
    for a in range(2, limit):
        if not spf[a]:
            spf[a] = a
            top = 1 << (max_degree - a.bit_length() + 2)
            for h in range(2, top):
                prod = mul(a, h)
                if not spf[prod]:
                    spf[prod] = a
    _SPF_TABLE = spf
    _SPF_DEGREE = max_degree


def factor_mask(a):
    """Factor a GF(2) mask via the cached table, ascending by factor mask."""
    if a <= 0:
        raise ValueError("mask must encode a nonzero polynomial")
    prepare_gf2_cache(a.bit_length() - 1)
    divrem = _gf2.divrem
    table = _SPF_TABLE
    out = []
    while a != 1:
        f = table[a]
        e = 0
        while True:
            q, r = divrem(a, f)
            if r:
                break
            a = q
            e += 1
        out.append((f, e))
    return out


@dataclass
class ClassCounts:
    """Irreducible counts per factorization-shape bucket for one degree.

    classic: no x factor, a single irreducible (with multiplicity one);
    tame: a positive power of x times at most one irreducible;
    wild: no x factor, two or more irreducible factors with multiplicity.
    For F_2[x^2,x^3] these buckets coincide with the proper classification.
    max_m / max_k track the extreme shapes seen among irreducibles.
    """

    classic: int = 0
    tame: int = 0
    wild: int = 0
    total: int = 0
    max_m: int = 0
    max_k: int = 0

    def absorb(self, other):
        self.classic += other.classic
        self.tame += other.tame
        self.wild += other.wild
        self.total += other.total
        self.max_m = max(self.max_m, other.max_m)
        self.max_k = max(self.max_k, other.max_k)

    def as_tuple(self):
        return (self.classic, self.tame, self.wild, self.total)


def _free_positions(ctx, n):
    contains = ctx.semigroup.contains
    return [i for i in range(n) if contains(i)]


def member_count(ctx, n):
    """Number of monic degree-n members (0 when n is a gap)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not ctx.semigroup.contains(n):
        return 0
    return ctx.field.p ** len(_free_positions(ctx, n))


def count_classes(ctx, n, lo=0, hi=None):
    """Scan members of degree n (index range [lo, hi)) and bucket irreducibles.

    The index range refers to the canonical enumeration order of
    enumerate_degree, so disjoint ranges can run on separate workers and
    their ClassCounts absorb into the full-degree answer.
    """
    counts = ClassCounts()
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0 or not ctx.semigroup.contains(n):
        return counts
    free = _free_positions(ctx, n)
    total = ctx.field.p ** len(free)
    if hi is None:
        hi = total
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"invalid scan range [{lo}, {hi}) for {total} members")
    if ctx.field.p == 2:
        _scan_gf2(ctx, n, free, lo, hi, counts, None)
    else:
        _scan_generic(ctx, n, free, lo, hi, counts, None)
    return counts


def iter_irreducible(ctx, n):
    """Yield (polynomial, factorization, class) per irreducible member of degree n.

    Stream order matches enumerate_degree; class is None outside F_2[x^2,x^3].
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0 or not ctx.semigroup.contains(n):
        return
    free = _free_positions(ctx, n)
    total = ctx.field.p ** len(free)
    out = []
    counts = ClassCounts()
    if ctx.field.p == 2:
        _scan_gf2(ctx, n, free, 0, total, counts, out)
    else:
        _scan_generic(ctx, n, free, 0, total, counts, out)
    yield from out


def _bucket(counts, collect, m, k, record):
    counts.total += 1
    counts.max_m = max(counts.max_m, m)
    counts.max_k = max(counts.max_k, k)
    if m == 0 and k == 1:
        counts.classic += 1
        cls = CLASSIC
    elif m > 0:
        counts.tame += 1
        cls = tame(m) if m in (2, 3) else None
    else:
        counts.wild += 1
        cls = WILD
    if collect is not None:
        collect.append((record, cls))


def _scan_gf2(ctx, n, free, lo, hi, counts, collect):
    prepare_gf2_cache(n)
    table = _SPF_TABLE
    divrem = _gf2.divrem
    mul = _gf2.mul
    gap = ctx.gap_mask
    friendly = ctx.is_friendly

    # split the free positions into two lookup halves for fast mask assembly
    half = len(free) // 2
    lo_tab = _bit_table(free[:half])
    hi_tab = _bit_table(free[half:])
    lo_mask = (1 << half) - 1
    base = 1 << n

    items = []
    for idx in range(lo, hi):
        a = base | lo_tab[idx & lo_mask] | hi_tab[idx >> half]
        mask = a
        fac = []
        while a != 1:
            f = table[a]
            e = 0
            while True:
                q, r = divrem(a, f)
                if r:
                    break
                a = q
                e += 1
            fac.append((f, e))

        divs = [1]
        for f, e in fac:
            powers = [1]
            for _ in range(e):
                powers.append(mul(powers[-1], f))
            divs = [mul(d, w) for w in powers for d in divs]
        total = len(divs)
        reducible = False
        for i in range(1, (total - 1) // 2 + 1):
            if not divs[i] & gap and not divs[total - 1 - i] & gap:
                reducible = True
                break
        if reducible:
            continue
        if fac and fac[0][0] == 2:
            m = fac[0][1]
            k = sum(e for _, e in fac[1:])
        else:
            m = 0
            k = sum(e for _, e in fac)
        _bucket(counts, items if collect is not None else None, m, k, (mask, fac))

    if collect is not None:
        field = ctx.field
        for (mask, fac), cls in items:
            poly = Polynomial.from_mask(field, mask)
            factors = tuple((Polynomial.from_mask(field, f), e) for f, e in fac)
            collect.append((poly, FqFactorization(field, 1, factors), cls if friendly else None))


def _bit_table(positions):
    table = []
    for i in range(1 << len(positions)):
        m = 0
        for j, pos in enumerate(positions):
            if i >> j & 1:
                m |= 1 << pos
        table.append(m)
    return table


def _scan_generic(ctx, n, free, lo, hi, counts, collect):
    p = ctx.field.p
    friendly = ctx.is_friendly
    for idx in range(lo, hi):
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        t = idx
        for pos in free:
            t, coeffs[pos] = t // p, t % p
        f = Polynomial(ctx.field, tuple(coeffs))
        verdict = is_irreducible_in_algebra(ctx, f)
        if not verdict.is_irreducible:
            continue
        fac = factor_fq(f)
        m, k = _shape_of(fac)
        items = [] if collect is not None else None
        _bucket(counts, items, m, k, None)
        if collect is not None:
            cls = items[0][1] if friendly else None
            collect.append((f, fac, cls))
