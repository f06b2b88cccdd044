"""Schur-basis expansions and the tableau engine behind them.

Littlewood-Richardson coefficients are counted by exhaustive enumeration of
skew semistandard tableaux whose reverse reading word (right to left, top to
bottom) is a lattice word; Kostka numbers reuse the same filling engine with
the lattice condition switched off.  Both counters share a process-wide memo
cache whose fills are idempotent, so concurrent readers are safe.
"""

from __future__ import annotations

from .errors import DegreeMismatchError
from .partitions import Composition, Partition, SkewShape, partitions_of

_EMPTY = Partition(())

_LR_CACHE: dict[tuple, int] = {}
_KOSTKA_CACHE: dict[tuple, int] = {}
_SKEW_CACHE: dict[tuple, "SchurExpansion"] = {}
_PRODUCT_CACHE: dict[tuple, tuple] = {}


class SchurExpansion:
    """An integer combination of Schur-basis terms in a single degree.

    Keys are partitions of `degree`; zero coefficients are never stored.
    Coefficients may be negative in intermediate (virtual) expansions.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        self.degree = int(degree)
        clean = {}
        for p, c in dict(terms or {}).items():
            if not isinstance(p, Partition):
                p = Partition(p)
            if p.size != self.degree:
                raise DegreeMismatchError(
                    f"term {p!r} does not have degree {self.degree}"
                )
            c = int(c)
            if c:
                clean[p] = c
        self.terms = clean

    @classmethod
    def zero(cls, degree: int) -> "SchurExpansion":
        return cls(degree, {})

    @classmethod
    def single(cls, part: Partition, coeff: int = 1) -> "SchurExpansion":
        return cls(part.size, {part: coeff})

    def coefficient(self, part: Partition) -> int:
        return self.terms.get(part, 0)

    def items(self):
        """Terms in descending lexicographic order of partitions."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def conjugate(self) -> "SchurExpansion":
        return SchurExpansion(self.degree, {p.conjugate(): c for p, c in self.terms.items()})

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatchError("cannot add expansions of different degrees")
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, 0) + c
        return SchurExpansion(self.degree, acc)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar: int):
        return SchurExpansion(self.degree, {p: c * scalar for p, c in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return (
            isinstance(other, SchurExpansion)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"SchurExpansion({self.degree}, 0)"
        body = " + ".join(f"{c}*s({p.text()})" for p, c in self.items())
        return f"SchurExpansion({self.degree}, {body})"


def _count_fillings(outer, inner, content, lattice):
    """Count skew semistandard fillings of outer/inner with the given content.

    Cells are scanned row by row, right to left, which is exactly the order
    of the reverse reading word; with `lattice` the prefix of that word must
    always contain at least as many i's as (i+1)'s.
    """
    cells = []
    for r in range(len(outer)):
        lo = inner[r] if r < len(inner) else 0
        for c in range(outer[r] - 1, lo - 1, -1):
            cells.append((r, c))
    if len(cells) != sum(content):
        return 0
    nvals = len(content)
    remaining = list(content)
    counts = [0] * (nvals + 2)
    grid = {}

    def rec(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = 1
        if r > 0:
            inner_above = inner[r - 1] if r - 1 < len(inner) else 0
            if inner_above <= c < outer[r - 1]:
                lo = grid[(r - 1, c)] + 1
        hi = grid.get((r, c + 1), nvals) if c + 1 < outer[r] else nvals
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if lattice and v > 1 and counts[v - 1] <= counts[v]:
                continue
            remaining[v - 1] -= 1
            counts[v] += 1
            grid[(r, c)] = v
            total += rec(k + 1)
            del grid[(r, c)]
            counts[v] -= 1
            remaining[v - 1] += 1
        return total

    return rec(0)


def kostka(shape: Partition, content: Composition, *, strict: bool = False) -> int:
    """Number of semistandard Young tableaux of the given shape and content.

    A degree mismatch yields 0 by convention, or raises when `strict`.
    """
    if shape.size != content.degree:
        if strict:
            raise DegreeMismatchError(
                f"shape has size {shape.size} but content has degree {content.degree}"
            )
        return 0
    key = (shape.parts, content.entries)
    hit = _KOSTKA_CACHE.get(key)
    if hit is None:
        hit = _count_fillings(shape.parts, (), content.entries, lattice=False)
        _KOSTKA_CACHE[key] = hit
    return hit


def lr_coeff(outer: Partition, left: Partition, right: Partition) -> int:
    """The Littlewood-Richardson coefficient c^outer_{left,right}.

    Impossible queries (size or containment failures) return 0.
    """
    if outer.size != left.size + right.size or not outer.contains(left):
        return 0
    key = (outer.parts, left.parts, right.parts)
    hit = _LR_CACHE.get(key)
    if hit is None:
        hit = _count_fillings(outer.parts, left.parts, right.parts, lattice=True)
        _LR_CACHE[key] = hit
    return hit


def skew_schur_expansion(shape: SkewShape) -> SchurExpansion:
    """Schur expansion of the skew Schur function of the shape."""
    key = (shape.outer.parts, shape.inner.parts)
    hit = _SKEW_CACHE.get(key)
    if hit is None:
        d = shape.size
        terms = {}
        for beta in partitions_of(d):
            c = lr_coeff(shape.outer, shape.inner, beta)
            if c:
                terms[beta] = c
        hit = SchurExpansion(d, terms)
        _SKEW_CACHE[key] = hit
    return hit


def _single_product(mu: Partition, nu: Partition):
    key = (mu.parts, nu.parts)
    hit = _PRODUCT_CACHE.get(key)
    if hit is None:
        d = mu.size + nu.size
        out = []
        for lam in partitions_of(d):
            c = lr_coeff(lam, mu, nu)
            if c:
                out.append((lam, c))
        hit = tuple(out)
        _PRODUCT_CACHE[key] = hit
    return hit


def schur_outer_product(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    """Bilinear extension of s_mu * s_nu = sum of c^lam_{mu,nu} s_lam."""
    if a.degree == 0:
        return b * a.coefficient(_EMPTY)
    if b.degree == 0:
        return a * b.coefficient(_EMPTY)
    acc = {}
    for mu, x in a.terms.items():
        for nu, y in b.terms.items():
            w = x * y
            for lam, c in _single_product(mu, nu):
                acc[lam] = acc.get(lam, 0) + w * c
    return SchurExpansion(a.degree + b.degree, acc)


def conjugate_expansion(a: SchurExpansion) -> SchurExpansion:
    """Replace every key by its conjugate partition, coefficients unchanged."""
    return a.conjugate()
