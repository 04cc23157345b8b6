"""Pulse envelopes and per-qubit Heisenberg coefficient maps.

A driven qubit evolves in its rotating frame under

    H = (Delta * sigma_z + Omega0 * f(t) * sigma_x) / 2,

where f(t) is the pulse envelope: a unit rectangle on [0, T], a decaying
exponential exp(-gamma_p * t), or zero for an undriven qubit.  The
Heisenberg picture maps each Pauli operator at time t back onto the t = 0
triple, giving a 3x3 coefficient matrix whose rows we call A, B and D:

    sigma_x(t) = A_x sigma_x(0) + A_y sigma_y(0) + A_z sigma_z(0)
    sigma_y(t) = B_x sigma_x(0) + B_y sigma_y(0) + B_z sigma_z(0)
    sigma_z(t) = D_x sigma_x(0) + D_y sigma_y(0) + D_z sigma_z(0)

For a rectangular pulse the closed forms are expressed through the
intermediate complex coefficients

    C_plus  = (1/2) [ (Omega/Omega_1)^2 + ((Delta^2 + Omega_1^2)/Omega_1^2) cos(Omega_1 t) ]
              + i (Delta/Omega_1) sin(Omega_1 t)
    C_minus = (1/2) (Omega/Omega_1)^2 (1 - cos(Omega_1 t))
    C_z     = (Delta Omega/Omega_1^2)(1 - cos(Omega_1 t)) - i (Omega/Omega_1) sin(Omega_1 t)

with Omega_1 = sqrt(Omega0^2 + Delta^2), and for the resonant exponential
pulse through the accumulated rotation angle

    lambda(t) = (Omega0/gamma_p) (1 - exp(-gamma_p t)),
    C_plus/minus = (1 +/- cos lambda)/2,   C_z = -i sin lambda.

Two assembly modes are provided, because the raw closed-form relations for
the B row,

    B_x = -(i/2)(C_plus + C_minus - c.c.),  B_y = i B_x,  B_z = -i A_z,

are internally inconsistent: they give imaginary coefficients for a
Hermitian observable.  LITERAL mode evaluates these relations verbatim and
lets downstream code measure the damage (see the imaginary-residue
diagnostics in the evolution module).  UNITARY mode, the default, keeps
the A and D rows and replaces the map by the unique proper rotation with
the same D row: the axis-angle rotation about (Omega0/Omega_1, 0,
Delta/Omega_1) by angle Omega_1 t for the rectangle, and about the x axis
by lambda(t) for the exponential.  The unitary map is exactly what
conjugation by the 2x2 propagator exp(-i t H) produces, which the test
suite verifies against independent oracles.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import OutOfWindow, ResonanceRequired

__all__ = [
    "PulseShape",
    "CoefficientMode",
    "PulseSpec",
    "IntermediateCoefficients",
    "CoefficientMatrix",
    "envelope",
    "pulse_angle",
    "rotation_matrix",
    "rect_intermediates",
    "exp_intermediates",
    "rect_coefficients",
    "exp_coefficients",
    "undriven_coefficients",
    "coefficient_map",
]


class PulseShape(Enum):
    RECTANGULAR = "rectangular"
    EXPONENTIAL = "exponential"
    NONE = "none"


class CoefficientMode(Enum):
    LITERAL = "literal"
    UNITARY = "unitary"


@dataclass(frozen=True)
class PulseSpec:
    """One qubit's drive: shape plus the parameters that shape needs.

    omega0 is the Rabi frequency, delta the detuning (drive frequency
    offset from the qubit transition).  Rectangular pulses carry a
    duration T > 0; exponential pulses carry a width gamma_p > 0 and are
    only defined on resonance, so delta must be zero for them.
    """

    shape: PulseShape
    omega0: float = 0.0
    delta: float = 0.0
    duration: float | None = None
    gamma_p: float | None = None

    def __post_init__(self):
        if self.omega0 < 0.0:
            raise ValueError("omega0 must be non-negative")
        if self.shape is PulseShape.RECTANGULAR:
            if self.duration is None or self.duration <= 0.0:
                raise ValueError("rectangular pulse requires duration > 0")
            if self.gamma_p is not None:
                raise ValueError("gamma_p does not apply to a rectangular pulse")
        elif self.shape is PulseShape.EXPONENTIAL:
            if self.gamma_p is None or self.gamma_p <= 0.0:
                raise ValueError("exponential pulse requires gamma_p > 0")
            if self.duration is not None:
                raise ValueError("duration does not apply to an exponential pulse")
            if self.delta != 0.0:
                raise ResonanceRequired("exponential drive is defined only at delta = 0")
        else:
            if self.omega0 != 0.0 or self.delta != 0.0:
                raise ValueError("an undriven qubit has omega0 = delta = 0")
            if self.duration is not None or self.gamma_p is not None:
                raise ValueError("width parameters do not apply to an undriven qubit")

    @classmethod
    def rectangular(cls, omega0: float, duration: float, delta: float = 0.0) -> "PulseSpec":
        return cls(PulseShape.RECTANGULAR, omega0=omega0, delta=delta, duration=duration)

    @classmethod
    def exponential(cls, omega0: float, gamma_p: float) -> "PulseSpec":
        return cls(PulseShape.EXPONENTIAL, omega0=omega0, gamma_p=gamma_p)

    @classmethod
    def none(cls) -> "PulseSpec":
        return cls(PulseShape.NONE)


@dataclass(frozen=True)
class IntermediateCoefficients:
    """The complex C coefficients a coefficient map is assembled from."""

    c_plus: complex
    c_minus: complex
    c_z: complex


@dataclass(frozen=True)
class CoefficientMatrix:
    """3x3 Heisenberg map with rows (A; B; D), possibly complex in LITERAL mode."""

    mode: CoefficientMode
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        if m.shape != (3, 3):
            raise ValueError(f"coefficient matrix must be 3x3, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def a_row(self) -> np.ndarray:
        return self.matrix[0]

    @property
    def b_row(self) -> np.ndarray:
        return self.matrix[1]

    @property
    def d_row(self) -> np.ndarray:
        return self.matrix[2]


def envelope(p: PulseSpec, t: float) -> float:
    """Pulse envelope f(t): rectangle 1 on [0, T], exponential decay, or 0."""
    if p.shape is PulseShape.RECTANGULAR:
        return 1.0 if 0.0 <= t <= p.duration else 0.0
    if p.shape is PulseShape.EXPONENTIAL:
        return math.exp(-p.gamma_p * t) if t >= 0.0 else 0.0
    return 0.0


def pulse_angle(p: PulseSpec, t: float) -> float:
    """Accumulated rotation angle lambda(t) of a resonant exponential pulse.

    lambda(t) = (Omega0/gamma_p)(1 - exp(-gamma_p t)).  Monotone
    non-decreasing, saturating at Omega0/gamma_p, which is what makes the
    exponential drive leave a frozen long-time state behind.
    """
    if p.shape is not PulseShape.EXPONENTIAL:
        raise ValueError("pulse_angle applies to exponential pulses only")
    return (p.omega0 / p.gamma_p) * (1.0 - math.exp(-p.gamma_p * t))


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """Proper rotation about a unit axis by the given angle (Rodrigues form)."""
    n = np.asarray(axis, dtype=float)
    c = math.cos(angle)
    s = math.sin(angle)
    cross = np.array(
        [
            [0.0, -n[2], n[1]],
            [n[2], 0.0, -n[0]],
            [-n[1], n[0], 0.0],
        ]
    )
    return c * np.eye(3) + s * cross + (1.0 - c) * np.outer(n, n)


def _literal_matrix(ic: IntermediateCoefficients, d_row) -> np.ndarray:
    """Assemble the verbatim closed-form map from the C coefficients.

    A row: A_x = Re(C+ + C-), A_y = -Im(C+ - C-), A_z = Re(C_z).
    B row taken at face value: B_x = Im(C+ + C-), B_y = i B_x,
    B_z = -i A_z.  The last two are imaginary whenever they are nonzero,
    which is the inconsistency LITERAL mode exists to expose.
    """
    a_x = (ic.c_plus + ic.c_minus).real
    a_y = -(ic.c_plus - ic.c_minus).imag
    a_z = ic.c_z.real
    b_x = (ic.c_plus + ic.c_minus).imag
    m = np.array(
        [
            [a_x, a_y, a_z],
            [b_x, 1j * b_x, -1j * a_z],
            d_row,
        ],
        dtype=np.complex128,
    )
    return m


def rect_intermediates(p: PulseSpec, t: float) -> IntermediateCoefficients:
    """C coefficients of a rectangular pulse at time t in [0, T]."""
    if p.shape is not PulseShape.RECTANGULAR:
        raise ValueError("rect_intermediates requires a rectangular pulse")
    if not 0.0 <= t <= p.duration:
        raise OutOfWindow(f"t = {t} outside the pulse window [0, {p.duration}]")
    om, dl = p.omega0, p.delta
    om1 = math.hypot(om, dl)
    if om1 == 0.0:
        return IntermediateCoefficients(1.0 + 0.0j, 0.0j, 0.0j)
    c = math.cos(om1 * t)
    s = math.sin(om1 * t)
    ratio2 = (om / om1) ** 2
    c_plus = 0.5 * (ratio2 + (dl * dl + om1 * om1) / (om1 * om1) * c) + 1j * (dl / om1) * s
    c_minus = 0.5 * ratio2 * (1.0 - c)
    c_z = (dl * om / (om1 * om1)) * (1.0 - c) - 1j * (om / om1) * s
    return IntermediateCoefficients(c_plus, c_minus, c_z)


def exp_intermediates(p: PulseSpec, t: float) -> IntermediateCoefficients:
    """C coefficients of a resonant exponential pulse at time t >= 0."""
    if p.shape is not PulseShape.EXPONENTIAL:
        raise ValueError("exp_intermediates requires an exponential pulse")
    if t < 0.0:
        raise OutOfWindow(f"t = {t} precedes the pulse start")
    lam = pulse_angle(p, t)
    c = math.cos(lam)
    return IntermediateCoefficients(0.5 * (1.0 + c), 0.5 * (1.0 - c), -1j * math.sin(lam))


def rect_coefficients(
    p: PulseSpec, t: float, mode: CoefficientMode = CoefficientMode.UNITARY
) -> CoefficientMatrix:
    """Coefficient map of a rectangular pulse at time t.

    The D row is the same in both modes:

        D = ( (Delta Omega/Omega_1^2)(1 - cos),  (Omega/Omega_1) sin,
              (Omega^2 cos + Delta^2)/Omega_1^2 ),

    the last entry written in the equivalent form that stays finite as
    Omega -> 0.  UNITARY mode returns the rotation about
    (Omega/Omega_1, 0, Delta/Omega_1) by Omega_1 t, whose third row is
    exactly this D row.  A drive with Omega0 = 0 is a valid no-op at
    Delta = 0 (identity) and a plain z rotation otherwise.
    """
    if p.shape is not PulseShape.RECTANGULAR:
        raise ValueError("rect_coefficients requires a rectangular pulse")
    if not 0.0 <= t <= p.duration:
        raise OutOfWindow(f"t = {t} outside the pulse window [0, {p.duration}]")
    om, dl = p.omega0, p.delta
    om1 = math.hypot(om, dl)
    if om1 == 0.0:
        return CoefficientMatrix(mode, np.eye(3, dtype=np.complex128))
    if mode is CoefficientMode.UNITARY:
        rot = rotation_matrix((om / om1, 0.0, dl / om1), om1 * t)
        return CoefficientMatrix(mode, rot.astype(np.complex128))
    c = math.cos(om1 * t)
    s = math.sin(om1 * t)
    d_row = (
        (dl * om / (om1 * om1)) * (1.0 - c),
        (om / om1) * s,
        (om * om * c + dl * dl) / (om1 * om1),
    )
    return CoefficientMatrix(mode, _literal_matrix(rect_intermediates(p, t), d_row))


def exp_coefficients(
    p: PulseSpec, t: float, mode: CoefficientMode = CoefficientMode.UNITARY
) -> CoefficientMatrix:
    """Coefficient map of a resonant exponential pulse at time t >= 0.

    D row = (0, sin lambda, cos lambda).  UNITARY mode is the x-axis
    rotation by lambda(t); LITERAL mode assembles the verbatim closed
    forms, whose B row vanishes identically on resonance.
    """
    if p.shape is not PulseShape.EXPONENTIAL:
        raise ValueError("exp_coefficients requires an exponential pulse")
    if p.delta != 0.0:
        raise ResonanceRequired("exponential drive is defined only at delta = 0")
    if t < 0.0:
        raise OutOfWindow(f"t = {t} precedes the pulse start")
    lam = pulse_angle(p, t)
    if mode is CoefficientMode.UNITARY:
        return CoefficientMatrix(mode, rotation_matrix((1.0, 0.0, 0.0), lam).astype(np.complex128))
    d_row = (0.0, math.sin(lam), math.cos(lam))
    return CoefficientMatrix(mode, _literal_matrix(exp_intermediates(p, t), d_row))


def undriven_coefficients(mode: CoefficientMode = CoefficientMode.UNITARY) -> CoefficientMatrix:
    """Identity map: an undriven qubit does nothing in its rotating frame."""
    return CoefficientMatrix(mode, np.eye(3, dtype=np.complex128))


def coefficient_map(
    p: PulseSpec, t: float, mode: CoefficientMode = CoefficientMode.UNITARY
) -> CoefficientMatrix:
    """Dispatch to the coefficient map matching the pulse shape."""
    if p.shape is PulseShape.RECTANGULAR:
        return rect_coefficients(p, t, mode)
    if p.shape is PulseShape.EXPONENTIAL:
        return exp_coefficients(p, t, mode)
    return undriven_coefficients(mode)
