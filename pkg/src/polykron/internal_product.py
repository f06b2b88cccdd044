"""Decompositions of internal tensor products of polynomial functors.

Products of divided/symmetric/exterior power functors decompose over the set
of contingency matrices with the two weights as margins.  Tensoring a Weyl
functor with a divided-power weight produces an explicit Weyl filtration whose
multiplicities are sums of products of Littlewood-Richardson coefficients,
indexed by chains of nested partitions.  Combining that filtration with the
Jacobi-Trudi determinant gives symmetric-group Kronecker multiplicities in
characteristic zero, with fast procedures when one factor is a two-row shape
or a hook.
"""

from __future__ import annotations

from enum import Enum

from .errors import ConsistencyError, DegreeMismatchError, SizeBoundError, UndefinedProductError
from .partitions import Composition, Partition, SkewShape, iter_contingency, partitions_of
from .schur import (
    SchurExpansion,
    conjugate_expansion,
    lr_coeff,
    schur_outer_product,
    skew_schur_expansion,
)

GAMMA = "Gamma"
SYM = "Sym"
WEDGE = "Wedge"
_FAMILIES = (GAMMA, SYM, WEDGE)

#: Default cap on the number of rows a Jacobi-Trudi determinant may have.
JACOBI_TRUDI_BOUND = 12

_WEYL_CACHE: dict[tuple, SchurExpansion] = {}
_PAIR_SUM_CACHE: dict[tuple, SchurExpansion] = {}
_HOOK_MIXED_CACHE: dict[tuple, SchurExpansion] = {}


class CharTwoMode(Enum):
    """Whether 2 is invertible, zero, or a nonzero nonunit in the base ring."""

    TWO_INVERTIBLE = "unit"
    TWO_ZERO = "zero"
    TWO_NONZERO_NONUNIT = "other"


class ExpFunctor:
    """An exponential-family functor: a Gamma/Sym/Wedge power of a weight."""

    __slots__ = ("family", "weight")

    def __init__(self, family: str, weight: Composition):
        if family not in _FAMILIES:
            raise ValueError(f"unknown exponential family {family!r}")
        self.family = family
        self.weight = weight

    @property
    def degree(self) -> int:
        return self.weight.degree

    def __eq__(self, other):
        return (
            isinstance(other, ExpFunctor)
            and self.family == other.family
            and self.weight == other.weight
        )

    def __hash__(self):
        return hash((self.family, self.weight))

    def __repr__(self):
        return f"ExpFunctor({self.family}, {self.weight.text()})"


class ExpDecomposition:
    """A direct sum of exponential functors of one family."""

    __slots__ = ("family", "summands")

    def __init__(self, family: str, summands):
        if family not in _FAMILIES:
            raise ValueError(f"unknown exponential family {family!r}")
        summands = tuple(summands)
        degrees = {s.degree for s in summands}
        if len(degrees) > 1:
            raise DegreeMismatchError("summands must all have the same degree")
        self.family = family
        self.summands = summands

    @property
    def degree(self) -> int:
        return self.summands[0].degree if self.summands else 0

    def __eq__(self, other):
        return (
            isinstance(other, ExpDecomposition)
            and self.family == other.family
            and self.summands == other.summands
        )

    def __repr__(self):
        body = ", ".join(s.text() for s in self.summands)
        return f"ExpDecomposition({self.family}, [{body}])"


def _contingency_weights(mu: Composition, lam: Composition):
    return tuple(m.flatten() for m in iter_contingency(mu, lam))


def gamma_tensor_gamma(mu: Composition, lam: Composition) -> ExpDecomposition:
    """Product of two divided-power weights: one Gamma summand per matrix
    with row sums mu and column sums lam, flattened row-major."""
    return ExpDecomposition(GAMMA, _contingency_weights(mu, lam))


# Output family for each unordered pair of input families.  The Sym/Wedge
# pair is the one case that depends on the behaviour of 2 in the base ring.
_FAMILY_TABLE = {
    frozenset([GAMMA]): GAMMA,
    frozenset([GAMMA, WEDGE]): WEDGE,
    frozenset([GAMMA, SYM]): SYM,
    frozenset([WEDGE]): SYM,
    frozenset([SYM]): SYM,
}


def exponential_tensor(
    left: ExpFunctor,
    right: ExpFunctor,
    mode: CharTwoMode = CharTwoMode.TWO_INVERTIBLE,
) -> ExpDecomposition:
    """Internal product of two exponential functors.

    The summand weights are always the flattened contingency matrices of the
    two input weights; only the output family depends on the family pair.
    """
    pair = frozenset([left.family, right.family])
    if pair == frozenset([SYM, WEDGE]):
        if mode is CharTwoMode.TWO_INVERTIBLE:
            family = WEDGE
        elif mode is CharTwoMode.TWO_ZERO:
            family = SYM
        else:
            raise UndefinedProductError(
                "Sym x Wedge is not an exponential direct sum when 2 is a "
                "nonzero nonunit in the base ring"
            )
    else:
        family = _FAMILY_TABLE[pair]
    return ExpDecomposition(family, _contingency_weights(left.weight, right.weight))


def _partitions_between(lower: Partition, upper: Partition, size: int):
    """Partitions beta with lower <= beta <= upper cell-wise and |beta| = size."""
    up = upper.parts
    n = len(up)
    out = []

    def rec(row, prev, remaining, acc):
        if row == n:
            if remaining == 0:
                out.append(Partition(acc))
            return
        lo = lower.row(row)
        hi = min(up[row], prev, remaining)
        for x in range(hi, lo - 1, -1):
            rec(row + 1, x, remaining - x, acc + [x])

    rec(0, size, size, [])
    return out


def weyl_tensor_gamma(lam: Partition, nu: Composition) -> SchurExpansion:
    """Weyl-filtration multiplicities of (Weyl functor lam) x (Gamma weight nu).

    The coefficient of a partition beta is the sum, over chains of nested
    partitions growing from the empty shape to lam with step sizes nu_i, of
    the coefficient of s_beta in the product of the step skew Schur functions.
    A zero step forces the chain to pause, so weights with zeros are legal.
    The multiplicities are independent of the base ring.
    """
    if lam.size != nu.degree:
        raise DegreeMismatchError(
            f"partition has size {lam.size} but weight has degree {nu.degree}"
        )
    key = (lam.parts, nu.entries)
    hit = _WEYL_CACHE.get(key)
    if hit is not None:
        return hit
    empty = Partition(())
    dp = {empty: SchurExpansion.single(empty)}
    for step in nu:
        ndp = {}
        for alpha, expn in dp.items():
            for beta in _partitions_between(alpha, lam, alpha.size + step):
                piece = skew_schur_expansion(SkewShape(beta, alpha))
                if not piece:
                    continue
                contrib = schur_outer_product(expn, piece)
                if beta in ndp:
                    ndp[beta] = ndp[beta] + contrib
                else:
                    ndp[beta] = contrib
        dp = ndp
        if not dp:
            break
    result = dp.get(lam, SchurExpansion.zero(lam.size))
    _WEYL_CACHE[key] = result
    return result


def weyl_tensor_wedge(lam: Partition, nu: Composition) -> SchurExpansion:
    """Dual-Weyl-filtration multiplicities of (Weyl functor lam) x (Wedge nu).

    Keys index dual Weyl functors: the coefficient of beta here equals the
    coefficient of the conjugate of beta in weyl_tensor_gamma(lam, nu).
    The multiplicities are independent of the base ring.
    """
    return conjugate_expansion(weyl_tensor_gamma(lam, nu))


def jacobi_trudi(mu: Partition, *, bound: int = JACOBI_TRUDI_BOUND):
    """Signed h-indices from the determinant det(h_{mu_i - i + j}).

    Returns (sign, weight) pairs, one per permutation whose indices are all
    non-negative; zeros in the weights are kept.
    """
    n = len(mu)
    if n > bound:
        raise SizeBoundError(f"partition has {n} parts > bound {bound}")
    terms = []
    used = [False] * n
    sigma = [0] * n

    # Row i admits columns j >= i - mu_i only; the thresholds increase with i,
    # so filling rows bottom-up never runs into a dead end.
    def rec(k):
        if k == n:
            inv = sum(
                1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b]
            )
            idxs = [mu.parts[i] - (i + 1) + (sigma[i] + 1) for i in range(n)]
            terms.append(((-1) ** inv, Composition(idxs)))
            return
        i = n - 1 - k
        for j in range(max(0, i - mu.parts[i]), n):
            if used[j]:
                continue
            used[j] = True
            sigma[i] = j
            rec(k + 1)
            used[j] = False

    rec(0)
    return terms


def kronecker_general(lam: Partition, mu: Partition) -> SchurExpansion:
    """Kronecker decomposition via the alternating divided-power resolution.

    Expands mu through the Jacobi-Trudi determinant and accumulates the signed
    Weyl filtrations; the cancellations must leave every coefficient >= 0.
    """
    if lam.size != mu.size:
        raise DegreeMismatchError(
            f"partitions have sizes {lam.size} and {mu.size}"
        )
    acc = SchurExpansion.zero(lam.size)
    for sign, nu in jacobi_trudi(mu):
        acc = acc + sign * weyl_tensor_gamma(lam, nu)
    if not acc.is_nonnegative():
        raise ConsistencyError(
            f"negative coefficient in kronecker product of {lam.text()} and {mu.text()}: {acc!r}"
        )
    return acc


def _lr_pair_sum(lam: Partition, a: int, b: int) -> SchurExpansion:
    """Sum over mu of a, nu of b of c^lam_{mu,nu} * (s_mu * s_nu)."""
    key = (lam.parts, a, b)
    hit = _PAIR_SUM_CACHE.get(key)
    if hit is not None:
        return hit
    acc = SchurExpansion.zero(lam.size)
    for mu in partitions_of(a):
        if not lam.contains(mu):
            continue
        left = SchurExpansion.single(mu)
        for nu in partitions_of(b):
            c = lr_coeff(lam, mu, nu)
            if c:
                acc = acc + c * schur_outer_product(left, SchurExpansion.single(nu))
    _PAIR_SUM_CACHE[key] = acc
    return acc


def kronecker_two_row(lam: Partition, a: int, b: int) -> SchurExpansion:
    """Kronecker product with the two-row partition (a, b).

    The coefficient of alpha is the difference of the two double
    Littlewood-Richardson sums at splittings (a, b) and (a+1, b-1).
    """
    if not (a >= b >= 1):
        raise ValueError(f"need a >= b >= 1, got ({a}, {b})")
    if a + b != lam.size:
        raise DegreeMismatchError(f"{a} + {b} != {lam.size}")
    result = _lr_pair_sum(lam, a, b) - _lr_pair_sum(lam, a + 1, b - 1)
    if not result.is_nonnegative():
        raise ConsistencyError(
            f"negative coefficient in kronecker product of {lam.text()} and ({a},{b})"
        )
    return result


def kronecker_one_box(lam: Partition, a: int) -> SchurExpansion:
    """Kronecker product with (a, 1): corner count and one-box moves of lam."""
    if a < 1:
        raise ValueError(f"need a >= 1, got {a}")
    if a + 1 != lam.size:
        raise DegreeMismatchError(f"{a} + 1 != {lam.size}")
    corners = len(lam.outer_corners())
    acc = SchurExpansion(lam.size, {lam: corners - 1})
    for alpha in lam.one_box_moves():
        acc = acc + SchurExpansion.single(alpha)
    return acc


def hook_mixed(lam: Partition, p: int, q: int) -> SchurExpansion:
    """Weyl multiplicities of (Weyl lam) x (Gamma^p tensor Wedge^q).

    The coefficient of alpha is the sum over mu of p and nu of q of
    c^{lam'}_{mu',nu} * c^alpha_{mu,nu}; commuting and anticommuting letters
    conjugate the second piece of the chain.
    """
    if p < 1 or q < 0:
        raise ValueError(f"need p >= 1 and q >= 0, got ({p}, {q})")
    if p + q != lam.size:
        raise DegreeMismatchError(f"{p} + {q} != {lam.size}")
    key = (lam.parts, p, q)
    hit = _HOOK_MIXED_CACHE.get(key)
    if hit is not None:
        return hit
    lam_c = lam.conjugate()
    acc = SchurExpansion.zero(lam.size)
    for mu in partitions_of(p):
        if not lam.contains(mu):
            continue
        left = SchurExpansion.single(mu)
        mu_c = mu.conjugate()
        for nu in partitions_of(q):
            w = lr_coeff(lam_c, mu_c, nu)
            if w:
                acc = acc + w * schur_outer_product(left, SchurExpansion.single(nu))
    _HOOK_MIXED_CACHE[key] = acc
    return acc


def kronecker_hook(lam: Partition, p: int, q: int) -> SchurExpansion:
    """Kronecker product with the hook (p, 1^q), by the telescoping
    alternating sum of the mixed Gamma/Wedge products."""
    if p < 1 or q < 1:
        raise ValueError(f"need p >= 1 and q >= 1, got ({p}, {q})")
    if p + q != lam.size:
        raise DegreeMismatchError(f"{p} + {q} != {lam.size}")
    acc = SchurExpansion.zero(lam.size)
    sign = 1
    for i in range(q + 1):
        acc = acc + sign * hook_mixed(lam, p + i, q - i)
        sign = -sign
    if not acc.is_nonnegative():
        raise ConsistencyError(
            f"negative coefficient in kronecker product of {lam.text()} and ({p},1^{q})"
        )
    return acc


def _hook_split(mu: Partition):
    """(p, q) such that mu = (p, 1^q) with q >= 1, or None."""
    if len(mu) >= 2 and all(x == 1 for x in mu.parts[1:]):
        return mu.parts[0], len(mu) - 1
    return None


def kronecker(lam: Partition, mu: Partition, method: str = "auto"):
    """Kronecker decomposition of lam x mu; returns (expansion, method used).

    `auto` picks the cheapest applicable procedure from the shape of mu:
    one-box for (a, 1), two-row for two parts, hook for (p, 1^q), otherwise
    the general alternating algorithm.
    """
    if lam.size != mu.size:
        raise DegreeMismatchError(
            f"partitions have sizes {lam.size} and {mu.size}"
        )
    if method == "auto":
        if len(mu) == 2 and mu.parts[1] == 1:
            method = "one-box"
        elif len(mu) == 2:
            method = "two-row"
        elif _hook_split(mu):
            method = "hook"
        else:
            method = "general"
    if method == "general":
        return kronecker_general(lam, mu), method
    if method == "two-row":
        if len(mu) != 2:
            raise ValueError(f"mu = {mu.text()} is not a two-row partition")
        return kronecker_two_row(lam, mu.parts[0], mu.parts[1]), method
    if method == "one-box":
        if len(mu) != 2 or mu.parts[1] != 1:
            raise ValueError(f"mu = {mu.text()} is not of the form (a, 1)")
        return kronecker_one_box(lam, mu.parts[0]), method
    if method == "hook":
        split = _hook_split(mu)
        if split is None:
            raise ValueError(f"mu = {mu.text()} is not a hook with a nonempty leg")
        return kronecker_hook(lam, split[0], split[1]), method
    raise ValueError(f"unknown method {method!r}")
