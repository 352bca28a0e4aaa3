"""Static polarizability and first hyperpolarizability of dressed atoms.

Matrix elements between dressed states are handled as polynomials in the
field strength.  The assembly keeps each transition element to first
order in the field (one static-field vertex per element) and truncates
tensor products at the tensor's own leading field order: eps^2 for the
polarizability, eps^1 for the hyperpolarizability.  The static part of
the excited-excited elements (the permanent moments of the split Stark
levels) is secular and does not belong to the fluctuation chain of the
hyperpolarizability; it is subtracted there.  Energy denominators are
the unperturbed level splittings.

Under that bookkeeping the assembled hydrogen tensors reproduce the
closed forms

    alpha_33(eps) = -(2^18 / 3^11 E1) q^2 a0^2 (1 + 16 (q a0 eps / E1)^2)
    beta_333(eps) =  (2^38 / 3^22 E1^3) q^4 a0^4 eps

identically, which the test suite pins at 1e-10 relative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

import numpy as np

from .constants import ConstantsSet, default_constants
from .dressing import DressedState, bare_excited_m1, dress_hydrogen_excited, dress_hydrogen_ground
from .errors import DegeneracyError, DomainError
from .hydrogen import dipole_element

ElementFn = Callable[[Hashable, Hashable, int], float]


def _default_elements(constants: ConstantsSet) -> ElementFn:
    return lambda a, b, axis: dipole_element(a, b, axis, constants).value


@dataclass
class Polarizability:
    """Rank-2 static polarizability, C m^2 / V."""

    components: np.ndarray
    field_at_atom: float

    def __post_init__(self):
        self.components = np.asarray(self.components, dtype=float)
        if self.components.shape != (3, 3):
            raise DomainError(f"polarizability must be 3x3, got {self.components.shape}")
        if not np.allclose(self.components, self.components.T, rtol=1e-12, atol=0.0):
            raise DomainError("polarizability must be symmetric")

    def __getitem__(self, idx):
        return self.components[idx]

    def to_dict(self) -> dict:
        out = {"field_V_per_m": self.field_at_atom}
        for i in range(3):
            for j in range(3):
                out[f"alpha_{i + 1}{j + 1}_Cm2_per_V"] = float(self.components[i, j])
        return out


@dataclass
class Hyperpolarizability:
    """Rank-3 static first hyperpolarizability, C m^3 / V^2."""

    components: np.ndarray
    field_at_atom: float

    def __post_init__(self):
        self.components = np.asarray(self.components, dtype=float)
        if self.components.shape != (3, 3, 3):
            raise DomainError(f"hyperpolarizability must be 3x3x3, got {self.components.shape}")

    def __getitem__(self, idx):
        return self.components[idx]

    def to_dict(self) -> dict:
        out = {"field_V_per_m": self.field_at_atom}
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    out[f"beta_{i + 1}{j + 1}{k + 1}_Cm3_per_V2"] = float(
                        self.components[i, j, k]
                    )
        return out


def element_poly(bra: DressedState, ket: DressedState, axis: int,
                 elements: ElementFn) -> np.ndarray:
    """<bra| d_axis |ket> as [eps^0, eps^1, eps^2] coefficients.

    Coefficient-pair products beyond combined second order are discarded;
    the dressed states themselves stop at second order.
    """
    poly = np.zeros(3)
    for si, ci in bra.orders.items():
        if ci == (0.0, 0.0, 0.0):
            continue
        for sj, cj in ket.orders.items():
            if cj == (0.0, 0.0, 0.0):
                continue
            d = elements(si, sj, axis)
            if d == 0.0:
                continue
            poly[0] += ci[0] * cj[0] * d
            poly[1] += (ci[0] * cj[1] + ci[1] * cj[0]) * d
            poly[2] += (ci[0] * cj[2] + ci[1] * cj[1] + ci[2] * cj[0]) * d
    return poly


def _denominator(ground: DressedState, s: DressedState) -> float:
    e_s0 = s.energy0 - ground.energy0
    if e_s0 == 0.0:
        raise DegeneracyError(
            f"excited state {s.label!r} degenerate with ground {ground.label!r}"
        )
    return e_s0


def polarizability(ground: DressedState, excited: Sequence[DressedState],
                   elements: ElementFn | None = None,
                   constants: ConstantsSet | None = None) -> Polarizability:
    """alpha_ij = sum_s (d_i^0s d_j^s0 + d_j^0s d_i^s0) / E_s0 over dressed states."""
    constants = constants if constants is not None else default_constants()
    elements = elements if elements is not None else _default_elements(constants)
    eps = ground.epsilon
    alpha = np.zeros((3, 3))
    for s in excited:
        e_s0 = _denominator(ground, s)
        # one field vertex per transition element
        polys = [element_poly(ground, s, axis, elements)[:2] for axis in (1, 2, 3)]
        for i in range(3):
            for j in range(3):
                prod = np.convolve(polys[i], polys[j])  # exact through eps^2
                alpha[i, j] += 2.0 * np.polyval(prod[::-1], eps) / e_s0
    return Polarizability(components=alpha, field_at_atom=eps)


def hyperpolarizability(ground: DressedState, excited: Sequence[DressedState],
                        elements: ElementFn | None = None,
                        constants: ConstantsSet | None = None) -> Hyperpolarizability:
    """Six-permutation sum over dressed states divided by E_t0 E_s0.

    The intermediate set should contain the z-dressed Stark branches only;
    the transverse m = +-1 orbitals belong in the polarizability manifold,
    not here.  Middle (excited-excited) elements enter with their static
    part removed, and the triple products are truncated at the leading
    (linear) field order.
    """
    constants = constants if constants is not None else default_constants()
    elements = elements if elements is not None else _default_elements(constants)
    eps = ground.epsilon
    beta = np.zeros((3, 3, 3))

    n = len(excited)
    ends = np.zeros((n, 3, 2))      # <0| d_i |t>, degree <= 1
    middles = np.zeros((n, n, 3, 2))  # <t| d_j |s>, fluctuation part, degree <= 1
    denoms = np.zeros(n)
    for t, st in enumerate(excited):
        denoms[t] = _denominator(ground, st)
        for axis in (1, 2, 3):
            ends[t, axis - 1] = element_poly(ground, st, axis, elements)[:2]
    for t, st in enumerate(excited):
        for s, ss in enumerate(excited):
            for axis in (1, 2, 3):
                full = element_poly(st, ss, axis, elements)
                middles[t, s, axis - 1] = (0.0, full[1])  # static (secular) part dropped

    for t in range(n):
        for s in range(n):
            inv = 1.0 / (denoms[t] * denoms[s])
            for i in range(3):
                for j in range(3):
                    for k in range(3):
                        total = 0.0
                        for a, b, c_ in ((i, j, k), (i, k, j), (j, k, i),
                                         (j, i, k), (k, i, j), (k, j, i)):
                            # leading order only: eps^0 * eps^1 * eps^0 chains
                            e_t = ends[t, a]
                            mid = middles[t, s, b]
                            e_s = ends[s, c_]
                            lin = (e_t[0] * mid[0] * e_s[0] * 0.0
                                   + e_t[1] * mid[0] * e_s[0]
                                   + e_t[0] * mid[1] * e_s[0]
                                   + e_t[0] * mid[0] * e_s[1])
                            total += e_t[0] * mid[0] * e_s[0] + lin * eps
                        beta[i, j, k] += total * inv
    return Hyperpolarizability(components=beta, field_at_atom=eps)


def scalar_polarizability(ground: DressedState, excited_manifold: Sequence[DressedState],
                          elements: ElementFn | None = None,
                          constants: ConstantsSet | None = None) -> float:
    """Isotropic alpha = sum_s (2 / 3 E_s0) sum_i d_i^0s d_i^s0, at zero field."""
    if ground.epsilon != 0.0:
        raise DomainError("scalar polarizability is the unperturbed baseline; need eps = 0")
    constants = constants if constants is not None else default_constants()
    elements = elements if elements is not None else _default_elements(constants)
    total = 0.0
    for s in excited_manifold:
        e_s0 = _denominator(ground, s)
        acc = 0.0
        for axis in (1, 2, 3):
            d = element_poly(ground, s, axis, elements)[0]
            acc += d * d
        total += 2.0 * acc / (3.0 * e_s0)
    return total


def alpha33_closed_form(epsilon: float, constants: ConstantsSet | None = None) -> float:
    """-(2^18 / 3^11 E1) q^2 a0^2  -  (2^22 / 3^11 E1) q^2 a0^2 (q a0 eps / E1)^2."""
    c = constants if constants is not None else default_constants()
    qa = c.q * c.a0
    return (-(2.0**18 / 3.0**11) * qa**2 / c.E1
            - (2.0**22 / 3.0**11) * qa**2 * (qa * epsilon / c.E1) ** 2 / c.E1)


def beta333_closed_form(epsilon: float, constants: ConstantsSet | None = None) -> float:
    """(2^38 / 3^22) q^4 a0^4 eps / E1^3."""
    c = constants if constants is not None else default_constants()
    return 2.0**38 / 3.0**22 * (c.q * c.a0) ** 4 * epsilon / c.E1**3


def hydrogen_response(epsilon: float, constants: ConstantsSet | None = None
                      ) -> tuple[Polarizability, Hyperpolarizability]:
    """Dressed-hydrogen alpha and beta with the standard intermediate sets.

    alpha sums over both Stark branches plus the transverse m = +-1
    orbitals; beta over the Stark branches alone.
    """
    constants = constants if constants is not None else default_constants()
    ground = dress_hydrogen_ground(epsilon, constants)
    minus = dress_hydrogen_excited(epsilon, "minus", constants)
    plus = dress_hydrogen_excited(epsilon, "plus", constants)
    px = bare_excited_m1(1, constants)
    py = bare_excited_m1(-1, constants)
    alpha = polarizability(ground, [minus, plus, px, py], constants=constants)
    beta = hyperpolarizability(ground, [minus, plus], constants=constants)
    return alpha, beta


def hydrogen_scalar_polarizability(constants: ConstantsSet | None = None) -> float:
    """Unperturbed isotropic polarizability with the n <= 2 intermediate set."""
    constants = constants if constants is not None else default_constants()
    ground = dress_hydrogen_ground(0.0, constants)
    manifold = [
        dress_hydrogen_excited(0.0, "minus", constants),
        dress_hydrogen_excited(0.0, "plus", constants),
        bare_excited_m1(1, constants),
        bare_excited_m1(-1, constants),
    ]
    return scalar_polarizability(ground, manifold, constants=constants)
