"""Exhaustive verification sweeps pairing every decomposition with its oracle.

Each sweep walks a bounded family of inputs, compares the combinatorial
computation against the independent character-theoretic one (or an exact
identity), and stops at the first counterexample.  Tolerances are zero
everywhere: a single coefficient mismatch is a failure.
"""

from __future__ import annotations

from math import factorial

from .characters import (
    ClassFunction,
    class_size,
    dimension,
    internal_h_oracle,
    kronecker_oracle_expansion,
    lr_oracle,
    mn_character,
    perm_character,
)
from .errors import UndefinedProductError
from .internal_product import (
    GAMMA,
    SYM,
    WEDGE,
    CharTwoMode,
    ExpFunctor,
    exponential_tensor,
    gamma_tensor_gamma,
    jacobi_trudi,
    kronecker,
    kronecker_general,
    kronecker_hook,
    kronecker_one_box,
    kronecker_two_row,
    weyl_tensor_gamma,
    weyl_tensor_wedge,
)
from .partitions import (
    Partition,
    enumerate_compositions,
    iter_contingency,
    partitions_of,
)
from .schur import conjugate_expansion, kostka, lr_coeff


class SweepResult:
    """Outcome of one verification sweep."""

    __slots__ = ("name", "checks", "failure")

    def __init__(self, name: str, checks: int, failure: str | None = None):
        self.name = name
        self.checks = checks
        self.failure = failure

    @property
    def ok(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        if self.ok:
            return f"{self.name}: PASS ({self.checks} checks)"
        return f"{self.name}: FAIL ({self.checks} checks) first counterexample: {self.failure}"

    def __repr__(self):
        return f"SweepResult({self.line()!r})"


def _weights_up_to(d: int, max_parts: int):
    out = []
    for n in range(1, max_parts + 1):
        out.extend(enumerate_compositions(d, n))
    return out


def sweep_kron(max_d: int = 6) -> SweepResult:
    """Kronecker decompositions agree with the character class sums."""
    checks = 0
    for d in range(0, max_d + 1):
        for lam in partitions_of(d):
            for mu in partitions_of(d):
                got = kronecker_general(lam, mu)
                want = kronecker_oracle_expansion(lam, mu)
                checks += 1
                if got != want:
                    return SweepResult(
                        "kron", checks,
                        f"lambda={lam.text()} mu={mu.text()}: {got!r} != {want!r}",
                    )
    return SweepResult("kron", checks)


def sweep_fastpath(max_d: int = 8) -> SweepResult:
    """Two-row, one-box, and hook procedures match the general algorithm."""
    checks = 0
    for d in range(2, max_d + 1):
        for lam in partitions_of(d):
            for a in range(d - 1, 0, -1):
                b = d - a
                if not (a >= b >= 1):
                    continue
                got = kronecker_two_row(lam, a, b)
                want = kronecker_general(lam, Partition([a, b]))
                checks += 1
                if got != want:
                    return SweepResult(
                        "fastpath", checks,
                        f"two-row lambda={lam.text()} mu=({a},{b}): {got!r} != {want!r}",
                    )
            for q in range(1, d):
                p = d - q
                got = kronecker_hook(lam, p, q)
                want = kronecker_general(lam, Partition([p] + [1] * q))
                checks += 1
                if got != want:
                    return SweepResult(
                        "fastpath", checks,
                        f"hook lambda={lam.text()} mu=({p},1^{q}): {got!r} != {want!r}",
                    )
            got = kronecker_one_box(lam, d - 1)
            want = kronecker_two_row(lam, d - 1, 1)
            checks += 1
            if got != want:
                return SweepResult(
                    "fastpath", checks,
                    f"one-box lambda={lam.text()} a={d - 1}: {got!r} != {want!r}",
                )
    return SweepResult("fastpath", checks)


def sweep_fixture() -> SweepResult:
    """The d=3 worked product (2,1) x (2,1) comes out of all four procedures."""
    lam = Partition([2, 1])
    want = {
        Partition([3]): 1,
        Partition([2, 1]): 1,
        Partition([1, 1, 1]): 1,
    }
    paths = {
        "general": kronecker_general(lam, lam),
        "two-row": kronecker_two_row(lam, 2, 1),
        "one-box": kronecker_one_box(lam, 2),
        "hook": kronecker_hook(lam, 2, 1),
    }
    checks = 0
    for name, got in paths.items():
        checks += 1
        if got.terms != want:
            return SweepResult("fixture", checks, f"{name} path produced {got!r}")
    return SweepResult("fixture", checks)


def sweep_contingency(
    count_max_d: int = 8, char_max_d: int = 6, max_parts: int = 4
) -> SweepResult:
    """Margin enumeration has the RSK cardinality and the permutation-module
    character identity holds for the divided-power product."""
    checks = 0
    for d in range(0, count_max_d + 1):
        weights = _weights_up_to(d, max_parts)
        parts_d = partitions_of(d)
        for mu in weights:
            for lam in weights:
                count = sum(1 for _ in iter_contingency(mu, lam))
                rsk = sum(kostka(v, mu) * kostka(v, lam) for v in parts_d)
                checks += 1
                if count != rsk:
                    return SweepResult(
                        "contingency", checks,
                        f"count mu={mu.text()} lambda={lam.text()}: {count} != {rsk}",
                    )
    for d in range(0, char_max_d + 1):
        weights = _weights_up_to(d, max_parts)
        parts_d = partitions_of(d)
        for mu in weights:
            pc_mu = perm_character(mu)
            for lam in weights:
                product = pc_mu * perm_character(lam)
                acc = {rho: 0 for rho in parts_d}
                for nu in gamma_tensor_gamma(mu, lam).summands:
                    pc_nu = perm_character(nu)
                    for rho in parts_d:
                        acc[rho] += pc_nu[rho]
                checks += 1
                if ClassFunction(d, acc) != product:
                    return SweepResult(
                        "contingency", checks,
                        f"characters mu={mu.text()} lambda={lam.text()}",
                    )
    return SweepResult("contingency", checks)


def sweep_weyl(max_d: int = 7, max_parts: int = 4) -> SweepResult:
    """Weyl filtrations are non-negative and match the class-sum oracle."""
    checks = 0
    for d in range(0, max_d + 1):
        weights = _weights_up_to(d, max_parts)
        for lam in partitions_of(d):
            for nu in weights:
                got = weyl_tensor_gamma(lam, nu)
                checks += 1
                if not got.is_nonnegative():
                    return SweepResult(
                        "weyl", checks,
                        f"negative coefficient lambda={lam.text()} nu={nu.text()}",
                    )
                want = internal_h_oracle(lam, nu)
                if got != want:
                    return SweepResult(
                        "weyl", checks,
                        f"lambda={lam.text()} nu={nu.text()}: {got!r} != {want!r}",
                    )
                wedge = weyl_tensor_wedge(lam, nu)
                if wedge != conjugate_expansion(got):
                    return SweepResult(
                        "weyl", checks,
                        f"wedge lambda={lam.text()} nu={nu.text()}",
                    )
    return SweepResult("weyl", checks)


# Expected output family for each ordered family pair when 2 is invertible.
_EXPECTED_FAMILY = {
    (GAMMA, GAMMA): GAMMA,
    (GAMMA, SYM): SYM,
    (GAMMA, WEDGE): WEDGE,
    (SYM, GAMMA): SYM,
    (SYM, SYM): SYM,
    (SYM, WEDGE): WEDGE,
    (WEDGE, GAMMA): WEDGE,
    (WEDGE, SYM): WEDGE,
    (WEDGE, WEDGE): SYM,
}


def sweep_exptable(max_d: int = 6, max_parts: int = 3) -> SweepResult:
    """All nine exponential products have the stated family and summands,
    and the undefined Sym/Wedge case raises."""
    checks = 0
    for d in range(0, max_d + 1):
        weights = _weights_up_to(d, max_parts)
        for wl in weights:
            for wr in weights:
                summands = tuple(m.flatten() for m in iter_contingency(wl, wr))
                for (fl, fr), family in _EXPECTED_FAMILY.items():
                    got = exponential_tensor(ExpFunctor(fl, wl), ExpFunctor(fr, wr))
                    checks += 1
                    if got.family != family or got.summands != summands:
                        return SweepResult(
                            "exptable", checks,
                            f"{fl}^{wl.text()} x {fr}^{wr.text()} gave {got!r}",
                        )
                zero_mode = exponential_tensor(
                    ExpFunctor(SYM, wl), ExpFunctor(WEDGE, wr), CharTwoMode.TWO_ZERO
                )
                checks += 1
                if zero_mode.family != SYM or zero_mode.summands != summands:
                    return SweepResult(
                        "exptable", checks,
                        f"Sym^{wl.text()} x Wedge^{wr.text()} with 2=0 gave {zero_mode!r}",
                    )
                try:
                    exponential_tensor(
                        ExpFunctor(SYM, wl),
                        ExpFunctor(WEDGE, wr),
                        CharTwoMode.TWO_NONZERO_NONUNIT,
                    )
                except UndefinedProductError:
                    checks += 1
                else:
                    return SweepResult(
                        "exptable", checks,
                        f"Sym^{wl.text()} x Wedge^{wr.text()} did not raise for nonzero nonunit 2",
                    )
    return SweepResult("exptable", checks)


def sweep_jt(max_d: int = 8) -> SweepResult:
    """Re-expanding the signed determinant terms through Kostka numbers
    recovers each Schur function exactly."""
    checks = 0
    for d in range(0, max_d + 1):
        parts_d = partitions_of(d)
        for mu in parts_d:
            acc = {lam: 0 for lam in parts_d}
            for sign, nu in jacobi_trudi(mu):
                for lam in parts_d:
                    acc[lam] += sign * kostka(lam, nu)
            checks += 1
            if any(c != (1 if lam == mu else 0) for lam, c in acc.items()):
                return SweepResult("jt", checks, f"mu={mu.text()}: {acc}")
    return SweepResult("jt", checks)


def sweep_chars(max_d: int = 8) -> SweepResult:
    """Row orthogonality of the character table in every degree."""
    checks = 0
    for d in range(0, max_d + 1):
        parts_d = partitions_of(d)
        d_fact = factorial(d)
        for i, lam in enumerate(parts_d):
            for mu in parts_d[i:]:
                total = sum(
                    class_size(rho) * mn_character(lam, rho) * mn_character(mu, rho)
                    for rho in parts_d
                )
                want = d_fact if lam == mu else 0
                checks += 1
                if total != want:
                    return SweepResult(
                        "chars", checks,
                        f"lambda={lam.text()} mu={mu.text()}: {total} != {want}",
                    )
    return SweepResult("chars", checks)


def _is_structured(p: Partition) -> bool:
    return len(p) <= 2 or all(x == 1 for x in p.parts[1:])


def sweep_dims(max_d: int = 8) -> SweepResult:
    """Dimension identity: multiplicities weighted by hook-length dimensions
    multiply, for every pair through the dispatching Kronecker."""
    checks = 0
    for d in range(0, max_d + 1):
        parts_d = partitions_of(d)
        for i, lam in enumerate(parts_d):
            for mu in parts_d[i:]:
                a, b = lam, mu
                if _is_structured(a) and not _is_structured(b):
                    a, b = b, a
                expansion, _ = kronecker(a, b)
                total = sum(c * dimension(al) for al, c in expansion.terms.items())
                want = dimension(lam) * dimension(mu)
                checks += 1
                if total != want:
                    return SweepResult(
                        "dims", checks,
                        f"lambda={lam.text()} mu={mu.text()}: {total} != {want}",
                    )
    return SweepResult("dims", checks)


def sweep_lr(max_d: int = 7) -> SweepResult:
    """Tableau counts agree with induced-character inner products."""
    checks = 0
    for d in range(0, max_d + 1):
        for lam in partitions_of(d):
            for a in range(0, d + 1):
                for mu in partitions_of(a):
                    for nu in partitions_of(d - a):
                        got = lr_coeff(lam, mu, nu)
                        want = lr_oracle(lam, mu, nu)
                        checks += 1
                        if got != want:
                            return SweepResult(
                                "lr", checks,
                                f"({lam.text()}; {mu.text()}, {nu.text()}): {got} != {want}",
                            )
    return SweepResult("lr", checks)


#: suite name -> callable(max_d or None) -> SweepResult
_SUITES = {
    "kron": lambda m: sweep_kron(6 if m is None else m),
    "fastpath": lambda m: sweep_fastpath(8 if m is None else m),
    "fixture": lambda m: sweep_fixture(),
    "contingency": lambda m: sweep_contingency(
        8 if m is None else m, 6 if m is None else min(m, 6)
    ),
    "weyl": lambda m: sweep_weyl(7 if m is None else m),
    "exptable": lambda m: sweep_exptable(6 if m is None else m),
    "jt": lambda m: sweep_jt(8 if m is None else m),
    "chars": lambda m: sweep_chars(8 if m is None else m),
    "dims": lambda m: sweep_dims(8 if m is None else m),
    "lr": lambda m: sweep_lr(7 if m is None else m),
}

SUITE_NAMES = tuple(_SUITES)


def run_suites(names, max_d: int | None = None):
    """Run the selected suites (or all of them) and return their results."""
    if names == "all" or names == ["all"]:
        names = list(SUITE_NAMES)
    elif isinstance(names, str):
        names = [names]
    results = []
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or all")
        results.append(_SUITES[name](max_d))
    return results
