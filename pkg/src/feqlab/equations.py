"""Residual evaluators for the functional equations under study.

Every evaluator scans the full (x, y) grid, reports the sup-norm of the
defect and the lexicographically first pair attaining it. A function
"solves" an equation when max_abs <= eq_tol.

The sine variant here is
    integral f(sigma(y) x t) dmu(t) - integral f(x y t) dmu(t) = 2 f(x) f(y)
and the cosine variants replace the difference by a sum or drop the
measure; see the individual evaluators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateIntegral, NonCentralSupport, NotSigmaInvariant, WrongMorphismKind
from .measures import (
    DEFAULT_TOL,
    DiracMeasure,
    ToleranceConfig,
    check_function,
    integrate,
    is_sigma_invariant,
    measure_norm,
    right_transform,
    support_in_center,
)
from .semigroups import FiniteSemigroup, InvolutiveMorphism, MorphismKind


@dataclass(frozen=True)
class BatteryItem:
    """One diagnostic: a residual (ok when value <= eq_tol) or, with
    flag=True, a magnitude that must stay above eq_tol."""

    name: str
    value: float
    flag: bool
    ok: bool

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "value": self.value}
        if self.flag:
            out["flag"] = True
        out["ok"] = self.ok
        return out


@dataclass(frozen=True)
class ResidualReport:
    equation: str
    max_abs: float
    argmax: tuple[int, int]
    per_item: tuple[BatteryItem, ...] | None = None
    out_of_hypothesis: bool = False

    def passed(self, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
        ok = self.max_abs <= tol.eq_tol
        if self.per_item is not None:
            ok = ok and all(item.ok for item in self.per_item)
        return ok

    def to_json(self) -> dict:
        out: dict = {
            "equation": self.equation,
            "max_abs": self.max_abs,
            "argmax": [self.argmax[0], self.argmax[1]],
        }
        if self.per_item is not None:
            out["per_item"] = [item.to_json() for item in self.per_item]
        if self.out_of_hypothesis:
            out["out_of_hypothesis"] = True
        return out


def _grid_report(equation: str, grid: np.ndarray, *, out_of_hypothesis: bool = False) -> ResidualReport:
    mags = np.abs(grid)
    flat = int(np.argmax(mags))  # first occurrence in row-major order
    n = mags.shape[1]
    return ResidualReport(
        equation=equation,
        max_abs=float(mags.flat[flat]),
        argmax=(flat // n, flat % n),
        out_of_hypothesis=out_of_hypothesis,
    )


def _require_automorphism(sigma: InvolutiveMorphism) -> None:
    if sigma.kind is not MorphismKind.AUTOMORPHISM:
        raise WrongMorphismKind("this equation requires an automorphism")


def _require_invariant(upsilon: DiracMeasure, sigma: InvolutiveMorphism,
                       tol: ToleranceConfig) -> None:
    if not is_sigma_invariant(upsilon, sigma, tol):
        raise NotSigmaInvariant("measure must equal its pushforward under sigma")


def vanvleck_grid(sg: FiniteSemigroup, f: Sequence[complex], sigma: InvolutiveMorphism,
                  mu: DiracMeasure) -> np.ndarray:
    """Defect of the sine variant at every pair, no hypothesis checks."""
    arr = check_function(sg, f)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            left = t[sigma.map[y]][x]
            right = t[x][y]
            acc = 0j
            for p, w in mu.atoms:
                acc += w * (arr[t[left][p]] - arr[t[right][p]])
            grid[x, y] = acc - 2.0 * arr[x] * arr[y]
    return grid


def residual_vanvleck(sg: FiniteSemigroup, f: Sequence[complex], sigma: InvolutiveMorphism,
                      mu: DiracMeasure, tol: ToleranceConfig = DEFAULT_TOL,
                      force: bool = False) -> ResidualReport:
    """Sine variant. Central support is a standing hypothesis; force=True
    evaluates anyway and marks the report out-of-hypothesis."""
    central = support_in_center(mu, sg)
    if not central and not force:
        raise NonCentralSupport("mu must be supported in the center (use force to override)")
    grid = vanvleck_grid(sg, f, sigma, mu)
    return _grid_report("vanvleck", grid, out_of_hypothesis=not central)


def residual_dalembert(sg: FiniteSemigroup, g: Sequence[complex],
                       sigma: InvolutiveMorphism) -> ResidualReport:
    """Measure-free cosine variant g(xy) + g(sigma(y)x) = 2 g(x) g(y)."""
    arr = check_function(sg, g)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            grid[x, y] = arr[t[x][y]] + arr[t[sigma.map[y]][x]] - 2.0 * arr[x] * arr[y]
    return _grid_report("dalembert_variant", grid)


def residual_integral_dalembert(sg: FiniteSemigroup, f: Sequence[complex],
                                sigma: InvolutiveMorphism, upsilon: DiracMeasure,
                                tol: ToleranceConfig = DEFAULT_TOL) -> ResidualReport:
    """Middle-integral cosine variant
    integral f(x t y) + integral f(sigma(y) t x) = 2 f(x) f(y),
    requiring an automorphism and a sigma-invariant measure."""
    _require_automorphism(sigma)
    _require_invariant(upsilon, sigma, tol)
    arr = check_function(sg, f)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            sy = sigma.map[y]
            acc = 0j
            for p, w in upsilon.atoms:
                acc += w * (arr[t[t[x][p]][y]] + arr[t[t[sy][p]][x]])
            grid[x, y] = acc - 2.0 * arr[x] * arr[y]
    return _grid_report("integral_dalembert", grid)


def residual_central_dalembert(sg: FiniteSemigroup, f: Sequence[complex],
                               sigma: InvolutiveMorphism, upsilon: DiracMeasure,
                               tol: ToleranceConfig = DEFAULT_TOL) -> ResidualReport:
    """Collapsed trailing-integral form
    integral f(x y t) + integral f(sigma(y) x t) = 2 f(x) f(y),
    equivalent to the middle form when the support is central."""
    _require_automorphism(sigma)
    _require_invariant(upsilon, sigma, tol)
    arr = check_function(sg, f)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            syx = t[sigma.map[y]][x]
            acc = 0j
            for p, w in upsilon.atoms:
                acc += w * (arr[t[xy][p]] + arr[t[syx][p]])
            grid[x, y] = acc - 2.0 * arr[x] * arr[y]
    return _grid_report("corollary33", grid)


def spherical_grid(sg: FiniteSemigroup, psi: Sequence[complex],
                   upsilon: DiracMeasure) -> np.ndarray:
    """Defect of integral psi(x t y) dupsilon(t) = psi(x) psi(y)."""
    arr = check_function(sg, psi)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            acc = 0j
            for p, w in upsilon.atoms:
                acc += w * arr[t[t[x][p]][y]]
            grid[x, y] = acc - arr[x] * arr[y]
    return grid


def residual_spherical(sg: FiniteSemigroup, psi: Sequence[complex],
                       upsilon: DiracMeasure) -> ResidualReport:
    return _grid_report("spherical", spherical_grid(sg, psi, upsilon))


def residual_spherical_right(sg: FiniteSemigroup, psi: Sequence[complex],
                             upsilon: DiracMeasure) -> ResidualReport:
    """Trailing-integral variant integral psi(x y t) = psi(x) psi(y)."""
    arr = check_function(sg, psi)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            acc = 0j
            for p, w in upsilon.atoms:
                acc += w * arr[t[xy][p]]
            grid[x, y] = acc - arr[x] * arr[y]
    return _grid_report("spherical", grid)


def residual_sine_addition(sg: FiniteSemigroup, f: Sequence[complex],
                           g: Sequence[complex]) -> ResidualReport:
    """f(xy) = f(x) g(y) + f(y) g(x)."""
    fa = check_function(sg, f)
    ga = check_function(sg, g)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            grid[x, y] = fa[t[x][y]] - fa[x] * ga[y] - fa[y] * ga[x]
    return _grid_report("sine_addition", grid)


def residual_wilson(sg: FiniteSemigroup, f: Sequence[complex], g: Sequence[complex],
                    sigma: InvolutiveMorphism) -> ResidualReport:
    """f(xy) + f(sigma(y)x) = 2 f(x) g(y)."""
    fa = check_function(sg, f)
    ga = check_function(sg, g)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            grid[x, y] = fa[t[x][y]] + fa[t[sigma.map[y]][x]] - 2.0 * fa[x] * ga[y]
    return _grid_report("wilson_variant", grid)


def residual_middle_commutation(sg: FiniteSemigroup, f: Sequence[complex],
                                upsilon: DiracMeasure) -> ResidualReport:
    """integral f(x t y) = integral f(y t x); holds for solutions of the
    middle-integral cosine variant even on noncommutative semigroups."""
    arr = check_function(sg, f)
    t = sg.table
    n = sg.n
    grid = np.zeros((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            acc = 0j
            for p, w in upsilon.atoms:
                acc += w * (arr[t[t[x][p]][y]] - arr[t[t[y][p]][x]])
            grid[x, y] = acc
    return _grid_report("middle_commutation", grid)


def companion_cosine(sg: FiniteSemigroup, f: Sequence[complex], mu: DiracMeasure,
                     tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Normalized right average x -> integral f(x t) dmu(t) / integral f dmu.

    For a nonzero solution of the sine variant this solves the cosine
    variant and pairs with f in the sine-addition law."""
    arr = check_function(sg, f)
    mean = integrate(arr, mu)
    if abs(mean) <= tol.eq_tol:
        raise DegenerateIntegral("mean of f under mu vanishes")
    return right_transform(sg, arr, mu) / mean


def identity_battery(sg: FiniteSemigroup, f: Sequence[complex], sigma: InvolutiveMorphism,
                     mu: DiracMeasure, tol: ToleranceConfig = DEFAULT_TOL,
                     force: bool = False) -> list[BatteryItem]:
    """Diagnostics every nonzero sine-variant solution satisfies exactly.

    Items are numbered in battery order; all residual items must sit at
    zero and the mean flag must stay away from zero. On a non-solution
    the failing items localize which structural identity breaks.
    """
    if not support_in_center(mu, sg) and not force:
        raise NonCentralSupport("mu must be supported in the center (use force to override)")
    arr = check_function(sg, f)
    t = sg.table
    n = sg.n
    smap = sigma.map
    mean = integrate(arr, mu)
    rt = right_transform(sg, arr, mu)

    def sup(vals) -> float:
        return float(max(abs(v) for v in vals))

    odd = sup(arr[smap[x]] + arr[x] for x in range(n))
    cross = sup(
        arr[t[smap[y]][x]] + arr[t[smap[x]][y]] for x in range(n) for y in range(n)
    )
    twisted = sup(
        sum(
            wa * wb * arr[t[t[x][smap[a]]][b]]
            for a, wa in mu.atoms
            for b, wb in mu.atoms
        )
        - arr[x] * mean
        for x in range(n)
    )
    plain = sup(
        sum(
            wa * wb * arr[t[t[x][a]][b]]
            for a, wa in mu.atoms
            for b, wb in mu.atoms
        )
        + arr[x] * mean
        for x in range(n)
    )
    sigma_right = sup(rt[smap[x]] - rt[x] for x in range(n))
    sigma_twist = sup(
        sum(w * (arr[t[x][smap[p]]] - arr[t[smap[x]][smap[p]]]) for p, w in mu.atoms)
        for x in range(n)
    )
    pair_plain = float(abs(sum(wa * wb * arr[t[a][b]] for a, wa in mu.atoms for b, wb in mu.atoms)))
    pair_twist = float(abs(
        sum(wa * wb * arr[t[a][smap[b]]] for a, wa in mu.atoms for b, wb in mu.atoms)
    ))

    eq = tol.eq_tol
    items = [
        BatteryItem("1_sigma_odd", odd, False, odd <= eq),
        BatteryItem("2_nonzero_mean", float(abs(mean)), True, abs(mean) > eq),
        BatteryItem("3_cross_antisym", cross, False, cross <= eq),
        BatteryItem("4_twisted_double_mean", twisted, False, twisted <= eq),
        BatteryItem("5_double_mean", plain, False, plain <= eq),
        BatteryItem("6_sigma_right_mean", sigma_right, False, sigma_right <= eq),
        BatteryItem("7_sigma_twist_mean", sigma_twist, False, sigma_twist <= eq),
        BatteryItem("8_vanishing_double_mean", max(pair_plain, pair_twist), False,
                    max(pair_plain, pair_twist) <= eq),
    ]
    return items


def battery_report(sg: FiniteSemigroup, f: Sequence[complex], sigma: InvolutiveMorphism,
                   mu: DiracMeasure, tol: ToleranceConfig = DEFAULT_TOL,
                   force: bool = False) -> ResidualReport:
    """Sine-variant report with the identity battery attached; max_abs
    ranges over the equation grid (flag items carry no residual)."""
    base = residual_vanvleck(sg, f, sigma, mu, tol, force=force)
    items = identity_battery(sg, f, sigma, mu, tol, force=force)
    return ResidualReport(
        equation=base.equation,
        max_abs=base.max_abs,
        argmax=base.argmax,
        per_item=tuple(items),
        out_of_hypothesis=base.out_of_hypothesis,
    )
