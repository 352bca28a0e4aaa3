"""Second-order dressing of atomic states by a static electric field.

The field is taken along axis 3 throughout.  Dressed states keep their
coefficients split by power of the field strength, c(eps) = c0 + c1*eps
+ c2*eps**2, because the response-tensor assembly needs to do order
bookkeeping on products of coefficients.

Two construction routes are provided and tested against each other:

* `dress_generic` applies the textbook second-order formula to an
  arbitrary nondegenerate level of an arbitrary basis,
* `dress_hydrogen_ground` / `dress_hydrogen_excited` build the hydrogen
  n <= 2 closed forms (three-term ground state, Stark-split excited
  branches) directly.

gamma = 2^9 q a0 / (3^6 E1) is the small parameter; it is negative for a
bound ground state and |gamma * eps| < 0.1 marks the trusted field range.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .constants import ConstantsSet, default_constants
from .errors import DegeneracyError, DomainError
from .hydrogen import BasisState, dipole_element, level_energy

SQRT2 = math.sqrt(2.0)

# |gamma * eps| below this keeps the neglected third-order terms under ~1%
PERTURBATIVE_LIMIT = 0.1

# canonical hydrogen n <= 2 basis shared by all dressed states
N2_BASIS = (
    BasisState(1, 0, 0),
    BasisState(2, 0, 0),
    BasisState(2, 1, 0),
    BasisState(2, 1, 1),
    BasisState(2, 1, -1),
)


def gamma_parameter(constants: ConstantsSet | None = None) -> float:
    """2^9 q a0 / (3^6 E1), dimension m/V; negative since E1 < 0."""
    constants = constants if constants is not None else default_constants()
    return 2.0**9 * constants.q * constants.a0 / (3.0**6 * constants.E1)


def field_is_perturbative(epsilon: float, constants: ConstantsSet | None = None) -> bool:
    return abs(gamma_parameter(constants) * epsilon) < PERTURBATIVE_LIMIT


@dataclass(frozen=True)
class FieldConfig:
    """Static field magnitudes at the two atoms; direction fixed to axis 3."""

    epsilon_A: float
    epsilon_B: float
    direction: int = 3

    def __post_init__(self):
        if self.epsilon_A < 0 or self.epsilon_B < 0:
            raise DomainError(
                f"field magnitudes must be >= 0, got {self.epsilon_A}, {self.epsilon_B}"
            )
        if self.direction != 3:
            raise DomainError("field direction is fixed to axis 3")

    def trusted(self, constants: ConstantsSet | None = None) -> tuple[bool, bool]:
        return (field_is_perturbative(self.epsilon_A, constants),
                field_is_perturbative(self.epsilon_B, constants))


@dataclass(frozen=True)
class DressedState:
    """Field-dressed state as a map basis label -> (c0, c1, c2) prefactors.

    The numeric coefficient of a basis state is c0 + c1*eps + c2*eps**2.
    `energy0` is the unperturbed energy of the level being dressed, used
    as the denominator energy downstream.  Immutable after construction.
    """

    label: str
    epsilon: float
    energy0: float
    orders: Mapping[Hashable, tuple[float, float, float]]
    order: int = 2
    perturbative: bool = True

    @property
    def basis(self) -> tuple:
        return tuple(self.orders.keys())

    def coefficient_orders(self, state) -> tuple[float, float, float]:
        return self.orders.get(state, (0.0, 0.0, 0.0))

    def coefficient(self, state) -> float:
        c0, c1, c2 = self.coefficient_orders(state)
        return c0 + c1 * self.epsilon + c2 * self.epsilon**2

    @property
    def coefficients(self) -> dict:
        return {s: self.coefficient(s) for s in self.orders}


def overlap(a: DressedState, b: DressedState) -> float:
    """<a|b> as the sum of coefficient products (all coefficients real)."""
    if set(a.orders) != set(b.orders):
        raise DomainError(
            f"overlap requires a common basis, got {sorted(map(str, a.orders))} "
            f"vs {sorted(map(str, b.orders))}"
        )
    return sum(a.coefficient(s) * b.coefficient(s) for s in a.orders)


def induced_dipole(state: DressedState,
                   dipole_elements: Callable[[Hashable, Hashable, int], float] | None = None,
                   constants: ConstantsSet | None = None) -> np.ndarray:
    """<psi| d_vec |psi> in C m; exact zeros where selection rules forbid."""
    constants = constants if constants is not None else default_constants()
    if dipole_elements is None:
        dipole_elements = lambda a, b, axis: dipole_element(a, b, axis, constants).value
    coeffs = state.coefficients
    out = np.zeros(3)
    for axis in (1, 2, 3):
        total = 0.0
        for si, ci in coeffs.items():
            for sj, cj in coeffs.items():
                if ci == 0.0 or cj == 0.0:
                    continue
                total += ci * cj * dipole_elements(si, sj, axis)
        out[axis - 1] = total
    return out


def dress_generic(basis: Sequence[Hashable],
                  energies: Mapping[Hashable, float],
                  dipole_z: Callable[[Hashable, Hashable], float],
                  epsilon: float,
                  target: Hashable,
                  label: str | None = None) -> DressedState:
    """Second-order dressed state of `target` for a z-directed field.

    `dipole_z` returns <a| d_z |b> in C m for basis labels a, b.  The four
    terms of the second-order expansion are all kept: the norm correction
    on the target, the first-order admixtures, and both second-order
    pieces (double sum and diagonal-moment term).

    States degenerate with the target are rejected whenever they couple to
    it directly or through any intermediate; uncoupled degenerate states
    contribute nothing and are skipped.
    """
    if target not in basis:
        raise DomainError(f"target {target!r} not in basis")
    e_t = energies[target]
    others = [s for s in basis if s != target]

    # degeneracy screen before touching any denominator
    for s in others:
        if energies[s] != e_t:
            continue
        direct = dipole_z(s, target)
        chain = any(
            dipole_z(s, a) * dipole_z(a, target) != 0.0
            for a in others
            if a != s and energies[a] != e_t
        )
        if direct != 0.0 or chain:
            raise DegeneracyError(
                f"level {s!r} is degenerate with target {target!r} and coupled to it; "
                "use the closed-form Stark branches for split manifolds"
            )

    nondeg = [s for s in others if energies[s] != e_t]
    d_tt = dipole_z(target, target)

    orders: dict[Hashable, list[float]] = {s: [0.0, 0.0, 0.0] for s in basis}
    orders[target][0] = 1.0

    norm2 = 0.0
    for a in nondeg:
        d_at = dipole_z(a, target)
        if d_at == 0.0:
            continue
        e_ta = e_t - energies[a]
        orders[a][1] = -d_at / e_ta
        norm2 -= dipole_z(target, a) * d_at / (2.0 * e_ta**2)
    orders[target][2] = norm2

    for b in nondeg:
        e_tb = e_t - energies[b]
        second = 0.0
        for a in nondeg:
            d_ba = dipole_z(b, a)
            d_at = dipole_z(a, target)
            if d_ba == 0.0 or d_at == 0.0:
                continue
            second += d_ba * d_at / ((e_t - energies[a]) * e_tb)
        d_bt = dipole_z(b, target)
        if d_bt != 0.0 and d_tt != 0.0:
            second -= d_bt * d_tt / e_tb**2
        orders[b][2] += second

    first_amp = max((abs(v[1] * epsilon) for v in orders.values()), default=0.0)
    return DressedState(
        label=label or f"dressed {target!r}",
        epsilon=epsilon,
        energy0=e_t,
        orders={s: tuple(v) for s, v in orders.items()},
        perturbative=first_amp < SQRT2 * PERTURBATIVE_LIMIT,
    )


def _check_validity(epsilon: float, label: str, constants: ConstantsSet) -> bool:
    ok = field_is_perturbative(epsilon, constants)
    if not ok:
        warnings.warn(
            f"{label}: |gamma*eps| = {abs(gamma_parameter(constants) * epsilon):.3g} "
            f">= {PERTURBATIVE_LIMIT}; second-order dressing untrusted",
            stacklevel=3,
        )
    return ok


def dress_hydrogen_ground(epsilon: float,
                          constants: ConstantsSet | None = None) -> DressedState:
    """Dressed hydrogen ground state on the n <= 2 basis.

    Coefficients: 1 - gamma^2 eps^2 on |100>, -sqrt(2) gamma eps on |210>
    and -(3^6 / 2^6 sqrt(2)) gamma^2 eps^2 on |200>.
    """
    constants = constants if constants is not None else default_constants()
    g = gamma_parameter(constants)
    ok = _check_validity(epsilon, "dress_hydrogen_ground", constants)
    s100, s200, s210, s211, s21m = N2_BASIS
    orders = {
        s100: (1.0, 0.0, -g**2),
        s200: (0.0, 0.0, -(3.0**6 / (2.0**6 * SQRT2)) * g**2),
        s210: (0.0, -SQRT2 * g, 0.0),
        s211: (0.0, 0.0, 0.0),
        s21m: (0.0, 0.0, 0.0),
    }
    return DressedState(
        label="ground",
        epsilon=epsilon,
        energy0=level_energy(1, constants),
        orders=orders,
        perturbative=ok,
    )


def dress_hydrogen_excited(epsilon: float, branch: str,
                           constants: ConstantsSet | None = None) -> DressedState:
    """Dressed Stark branch of the hydrogen n = 2 level.

    branch "minus" dresses (|200> - |210>)/sqrt(2), branch "plus" the
    symmetric combination.  Both carry the (1 - gamma^2 eps^2 / 2) scaling
    and a -+(gamma eps -+ (3^6/2^7) gamma^2 eps^2) |100> admixture.
    """
    if branch not in ("minus", "plus"):
        raise DomainError(f"branch must be 'minus' or 'plus', got {branch!r}")
    constants = constants if constants is not None else default_constants()
    g = gamma_parameter(constants)
    ok = _check_validity(epsilon, f"dress_hydrogen_excited({branch})", constants)
    s100, s200, s210, s211, s21m = N2_BASIS
    sign = -1.0 if branch == "minus" else 1.0
    w = (1.0 / SQRT2, 0.0, -g**2 / (2.0 * SQRT2))
    orders = {
        s100: (0.0, sign * g, 3.0**6 / 2.0**7 * g**2),
        s200: w,
        s210: (sign * w[0], 0.0, sign * w[2]),
        s211: (0.0, 0.0, 0.0),
        s21m: (0.0, 0.0, 0.0),
    }
    return DressedState(
        label=f"excited-{branch}",
        epsilon=epsilon,
        energy0=level_energy(2, constants),
        orders=orders,
        perturbative=ok,
    )


def bare_excited_m1(m: int, constants: ConstantsSet | None = None) -> DressedState:
    """Undressed |21 m> (m = +-1) on the shared basis.

    The z-directed field does not couple these orbitals to the m = 0
    states, so they stay unperturbed; they matter only for the transverse
    polarizability components.
    """
    if m not in (1, -1):
        raise DomainError(f"m must be +-1, got {m}")
    constants = constants if constants is not None else default_constants()
    orders = {s: (0.0, 0.0, 0.0) for s in N2_BASIS}
    orders[BasisState(2, 1, m)] = (1.0, 0.0, 0.0)
    return DressedState(
        label="2p-x" if m == 1 else "2p-y",
        epsilon=0.0,
        energy0=level_energy(2, constants),
        orders=orders,
    )
