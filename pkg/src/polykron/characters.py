"""Symmetric-group character theory: the independent verification path.

Character values come from the border-strip recursion (strip a rim hook whose
length is the largest remaining cycle, with sign (-1)^height, and recurse),
dimensions from hook lengths, and every multiplicity formula is an exact
class-function inner product.  All divisions are exact; a nonzero remainder
raises instead of rounding.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .errors import ConsistencyError, DegreeMismatchError
from .partitions import Composition, Partition, partitions_of
from .schur import SchurExpansion

_MN_CACHE: dict[tuple, int] = {}


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod over part sizes i of i^m_i * m_i!."""
    z = 1
    mult = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for i, m in mult.items():
        z *= i**m * factorial(m)
    return z


def class_size(rho: Partition) -> int:
    """Number of permutations with cycle type rho: d!/z_rho."""
    d = rho.size
    z = centralizer_order(rho)
    q, r = divmod(factorial(d), z)
    if r:
        raise ConsistencyError(f"centralizer order {z} does not divide {d}!")
    return q


def _strip_removals(parts, length):
    """Yield (sign, smaller partition) for each removable border strip.

    Uses first-column hook lengths (beta numbers): removing a strip of the
    given length moves one beta number down by that length, provided the
    target is free; the sign is (-1)^(rows spanned - 1).
    """
    n = len(parts)
    betas = [parts[i] + n - 1 - i for i in range(n)]
    beta_set = set(betas)
    for i, b in enumerate(betas):
        nb = b - length
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_betas = sorted((x for x in betas if x != b), reverse=True)
        new_betas.append(nb)
        new_betas.sort(reverse=True)
        new_parts = [new_betas[j] - (n - 1 - j) for j in range(n)]
        yield (-1) ** height, Partition(new_parts)


def mn_character(lam: Partition, rho: Partition) -> int:
    """Character value of the irreducible indexed by lam at cycle type rho."""
    if lam.size != rho.size:
        raise DegreeMismatchError(
            f"partition of {lam.size} evaluated at a cycle type of {rho.size}"
        )
    if lam.size == 0:
        return 1
    key = (lam.parts, rho.parts)
    hit = _MN_CACHE.get(key)
    if hit is None:
        length = rho.parts[0]
        rest = Partition(rho.parts[1:])
        hit = sum(
            sign * mn_character(smaller, rest)
            for sign, smaller in _strip_removals(lam.parts, length)
        )
        _MN_CACHE[key] = hit
    return hit


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible: d! divided by the product of hook lengths."""
    conj = lam.conjugate()
    hooks = 1
    for i, p in enumerate(lam.parts):
        for j in range(p):
            hooks *= p - j + conj.parts[j] - i - 1
    q, r = divmod(factorial(lam.size), hooks)
    if r:
        raise ConsistencyError(f"hook product {hooks} does not divide {lam.size}!")
    return q


class ClassFunction:
    """An integer-valued function on the conjugacy classes of one degree."""

    __slots__ = ("degree", "values")

    def __init__(self, degree: int, values):
        self.degree = int(degree)
        values = dict(values)
        expected = set(partitions_of(self.degree))
        if set(values) != expected:
            raise ValueError("class function must be defined on every cycle type")
        self.values = {rho: int(v) for rho, v in values.items()}

    def __getitem__(self, rho: Partition) -> int:
        return self.values[rho]

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.degree == other.degree
            and self.values == other.values
        )

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.degree != other.degree:
            raise DegreeMismatchError("cannot multiply class functions of different degrees")
        return ClassFunction(
            self.degree, {rho: v * other.values[rho] for rho, v in self.values.items()}
        )

    def __repr__(self):
        body = ", ".join(f"{rho.text()}: {v}" for rho, v in sorted(
            self.values.items(), key=lambda kv: kv[0].parts, reverse=True))
        return f"ClassFunction({self.degree}, {{{body}}})"


@lru_cache(maxsize=None)
def _perm_value(blocks: tuple, rho_parts: tuple) -> int:
    """Ways to distribute the cycles of rho over blocks of the given sizes."""
    groups = []
    mult = {}
    for part in rho_parts:
        mult[part] = mult.get(part, 0) + 1
    groups = sorted(mult.items())
    nblocks = len(blocks)

    def distribute(gi, caps):
        if gi == len(groups):
            return 1
        length, count = groups[gi]
        total = 0

        def place(bi, left, caps_list, ways):
            nonlocal total
            if bi == nblocks:
                if left == 0:
                    total += ways * distribute(gi + 1, tuple(caps_list))
                return
            limit = min(left, caps_list[bi] // length)
            for k in range(limit + 1):
                caps_list[bi] -= k * length
                place(bi + 1, left - k, caps_list, ways * comb(left, k))
                caps_list[bi] += k * length

        place(0, count, list(caps), 1)
        return total

    return distribute(0, blocks)


def perm_character(nu: Composition) -> ClassFunction:
    """Character of the permutation module indexed by nu.

    The value at rho counts the ways to distribute the cycles of rho into
    blocks of sizes nu_i; it depends only on the nonzero entries of nu.
    """
    d = nu.degree
    blocks = nu.sorted_partition().parts
    return ClassFunction(
        d, {rho: _perm_value(blocks, rho.parts) for rho in partitions_of(d)}
    )


def kronecker_oracle(lam: Partition, mu: Partition, alpha: Partition) -> int:
    """Multiplicity of alpha in the tensor product of lam and mu irreducibles."""
    d = lam.size
    if mu.size != d or alpha.size != d:
        raise DegreeMismatchError("kronecker oracle needs three partitions of one degree")
    total = 0
    for rho in partitions_of(d):
        total += (
            class_size(rho)
            * mn_character(lam, rho)
            * mn_character(mu, rho)
            * mn_character(alpha, rho)
        )
    q, r = divmod(total, factorial(d))
    if r:
        raise ConsistencyError(
            f"kronecker class sum {total} is not divisible by {d}! "
            f"for ({lam.text()}, {mu.text()}, {alpha.text()})"
        )
    return q


def kronecker_oracle_expansion(lam: Partition, mu: Partition) -> SchurExpansion:
    """The full tensor-product decomposition given by the class-sum formula."""
    d = lam.size
    return SchurExpansion(
        d, {alpha: kronecker_oracle(lam, mu, alpha) for alpha in partitions_of(d)}
    )


def lr_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu} by induced-character inner product; no tableaux involved."""
    a, b = mu.size, nu.size
    if lam.size != a + b:
        raise DegreeMismatchError(
            f"outer partition has size {lam.size}, expected {a} + {b}"
        )
    total = 0
    for rho1 in partitions_of(a):
        chi1 = mn_character(mu, rho1)
        if chi1 == 0:
            continue
        w1 = factorial(a) // centralizer_order(rho1)
        for rho2 in partitions_of(b):
            chi2 = mn_character(nu, rho2)
            if chi2 == 0:
                continue
            w2 = factorial(b) // centralizer_order(rho2)
            union = Partition(sorted(rho1.parts + rho2.parts, reverse=True))
            total += w1 * w2 * chi1 * chi2 * mn_character(lam, union)
    q, r = divmod(total, factorial(a) * factorial(b))
    if r:
        raise ConsistencyError(
            f"induction class sum {total} is not divisible by {a}!*{b}! "
            f"for ({lam.text()}; {mu.text()}, {nu.text()})"
        )
    return q


def internal_h_oracle(lam: Partition, nu: Composition) -> SchurExpansion:
    """Decomposition of (irreducible lam) x (permutation module nu) by class sums."""
    d = lam.size
    if nu.degree != d:
        raise DegreeMismatchError(
            f"partition has size {d} but weight has degree {nu.degree}"
        )
    pc = perm_character(nu)
    d_fact = factorial(d)
    terms = {}
    for beta in partitions_of(d):
        total = 0
        for rho in partitions_of(d):
            total += (
                class_size(rho)
                * mn_character(lam, rho)
                * pc[rho]
                * mn_character(beta, rho)
            )
        q, r = divmod(total, d_fact)
        if r:
            raise ConsistencyError(
                f"class sum {total} is not divisible by {d}! "
                f"for ({lam.text()}, weight {nu.text()}, {beta.text()})"
            )
        if q:
            terms[beta] = q
    return SchurExpansion(d, terms)
