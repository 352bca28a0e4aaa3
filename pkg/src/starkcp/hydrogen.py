"""Hydrogen levels and electric-dipole matrix elements.

States are labelled (n, l, m) in the *real* orbital basis: m = 0 is the
z-type orbital, m = +|m| the cosine combination and m = -|m| the sine
combination of the complex harmonics (Condon-Shortley phases).  In this
basis every dipole matrix element is real; the ones used by the dressing
closed forms are

    <100| d_z |210> = (2^7 sqrt(2) / 3^5) q a0   ~ 0.744936 q a0
    <200| d_z |210> = -3 q a0

with the x (y) components coupling the same radial pairs through the
m = +1 (m = -1) orbitals.

`dipole_element` serves the analytic n <= 2 table; `radial_integral_oracle`
recomputes any n <= 10 element from scratch (Gauss-Laguerre-free adaptive
quadrature for the radial part, exact Gaunt coefficients for the angular
part) and is the independent check on the table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import eval_genlaguerre

from .constants import ConstantsSet, default_constants
from .errors import CapabilityError, DomainError, NumericsError

AXES = (1, 2, 3)

# radial integrals are well conditioned; the oracle contract is 1e-10 relative
_ORACLE_RTOL = 1.0e-10
_ORACLE_MAX_N = 10


@dataclass(frozen=True, order=True)
class BasisState:
    """Hydrogen orbital |n l m> in the real basis described above."""

    n: int
    l: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.l, int) and isinstance(self.m, int)):
            raise DomainError(f"quantum numbers must be integers, got {self!r}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got n={self.n}")
        if not 0 <= self.l < self.n:
            raise DomainError(f"l must satisfy 0 <= l < n, got l={self.l}, n={self.n}")
        if abs(self.m) > self.l:
            raise DomainError(f"m must satisfy |m| <= l, got m={self.m}, l={self.l}")

    def __str__(self):
        return f"|{self.n}{self.l}{self.m}>"


@dataclass(frozen=True)
class DipoleElement:
    """One component <bra| d_i |ket>, value in C m."""

    bra: BasisState
    ket: BasisState
    component: int
    value: float


def level_energy(n: int, constants: ConstantsSet | None = None) -> float:
    """Bohr energy E1 / n^2 in joules."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    constants = constants if constants is not None else default_constants()
    return constants.E1 / n**2


# Analytic n <= 2 table, in units of q*a0.  Keys are ((n,l,m),(n,l,m),axis)
# with both orderings implied by symmetry (all elements real).
_D_1S_2P = 2.0**7 * math.sqrt(2.0) / 3.0**5   # <100|z|210>
_B_2S_2P = -3.0                               # <200|z|210>

_TABLE = {
    ((1, 0, 0), (2, 1, 0), 3): _D_1S_2P,
    ((1, 0, 0), (2, 1, 1), 1): _D_1S_2P,
    ((1, 0, 0), (2, 1, -1), 2): _D_1S_2P,
    ((2, 0, 0), (2, 1, 0), 3): _B_2S_2P,
    ((2, 0, 0), (2, 1, 1), 1): _B_2S_2P,
    ((2, 0, 0), (2, 1, -1), 2): _B_2S_2P,
}


def dipole_element(a: BasisState, b: BasisState, axis: int,
                   constants: ConstantsSet | None = None) -> DipoleElement:
    """Closed-form <a| d_axis |b> for n <= 2; selection-rule zeros are exact."""
    if axis not in AXES:
        raise DomainError(f"axis must be one of {AXES}, got {axis}")
    if a.n > 2 or b.n > 2:
        raise CapabilityError(
            f"analytic table covers n <= 2 only (got n={a.n}, n={b.n}); "
            "use radial_integral_oracle for higher levels"
        )
    constants = constants if constants is not None else default_constants()
    key_ab = ((a.n, a.l, a.m), (b.n, b.l, b.m), axis)
    key_ba = ((b.n, b.l, b.m), (a.n, a.l, a.m), axis)
    scale = _TABLE.get(key_ab, _TABLE.get(key_ba, 0.0))
    return DipoleElement(bra=a, ket=b, component=axis, value=scale * constants.q * constants.a0)


def radial_wavefunction(n: int, l: int, u):
    """R_nl at radius u in Bohr units (a0 = 1), standard positive-at-origin sign."""
    norm = math.sqrt((2.0 / n) ** 3 * math.factorial(n - l - 1)
                     / (2.0 * n * math.factorial(n + l)))
    x = 2.0 * u / n
    return norm * x**l * eval_genlaguerre(n - l - 1, 2 * l + 1, x) * np.exp(-u / n)


@lru_cache(maxsize=None)
def _angular_factor(la: int, ma: int, lb: int, mb: int, axis: int) -> float:
    """Exact <la ma| x_axis / r |lb mb> over real harmonics, via Gaunt coefficients.

    Computed symbolically (sympy) so selection-rule zeros come out exactly
    zero, independently of the hand-written table.
    """
    import sympy as sp
    from sympy.physics.wigner import gaunt

    def complex_expansion(l, m):
        # real harmonic -> {complex m: coefficient}
        if m == 0:
            return {0: sp.Integer(1)}
        mm = abs(m)
        if m > 0:   # cosine type
            return {mm: sp.Integer(-1) ** mm / sp.sqrt(2), -mm: 1 / sp.sqrt(2)}
        # sine type; 1/(i sqrt2) coefficients
        return {mm: sp.Integer(-1) ** mm / (sp.I * sp.sqrt(2)),
                -mm: -1 / (sp.I * sp.sqrt(2))}

    # x_i / r expanded over complex Y_{1 mu}
    s23 = sp.sqrt(2 * sp.pi / sp.Integer(3))
    if axis == 1:
        op = {-1: s23, 1: -s23}
    elif axis == 2:
        op = {-1: sp.I * s23, 1: sp.I * s23}
    else:
        op = {0: sp.sqrt(4 * sp.pi / sp.Integer(3))}

    bra = complex_expansion(la, ma)
    ket = complex_expansion(lb, mb)
    total = sp.Integer(0)
    for m_bra, c_bra in bra.items():
        for mu, c_op in op.items():
            for m_ket, c_ket in ket.items():
                # integral of Y*_{la m_bra} Y_{1 mu} Y_{lb m_ket}
                g = sp.Integer(-1) ** m_bra * gaunt(la, 1, lb, -m_bra, mu, m_ket)
                total += sp.conjugate(c_bra) * c_op * c_ket * g
    total = sp.simplify(total)
    if sp.im(total) != 0:
        raise NumericsError(f"angular factor came out complex: {total}")
    return float(sp.re(total))


def radial_integral_oracle(a: BasisState, b: BasisState, axis: int,
                           constants: ConstantsSet | None = None) -> float:
    """<a| d_axis |b> in C m by quadrature, any n <= 10; the table's oracle."""
    if axis not in AXES:
        raise DomainError(f"axis must be one of {AXES}, got {axis}")
    if a.n > _ORACLE_MAX_N or b.n > _ORACLE_MAX_N:
        raise CapabilityError(f"oracle supports n <= {_ORACLE_MAX_N}")
    constants = constants if constants is not None else default_constants()

    angular = _angular_factor(a.l, a.m, b.l, b.m, axis)
    if angular == 0.0:
        return 0.0

    def integrand(u):
        return radial_wavefunction(a.n, a.l, u) * radial_wavefunction(b.n, b.l, u) * u**3

    u_max = 200.0 * max(a.n, b.n) ** 2
    radial, abserr = quad(integrand, 0.0, u_max, epsabs=1e-15, epsrel=1e-13, limit=500)
    if abs(radial) > 0 and abserr / abs(radial) > _ORACLE_RTOL:
        raise NumericsError(
            f"radial quadrature reached {abserr / abs(radial):.2e} relative, "
            f"needed {_ORACLE_RTOL:.1e}"
        )
    return radial * angular * constants.q * constants.a0
