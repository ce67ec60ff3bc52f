"""Time-dependent Lindblad generators and first-order small-time maps.

A generator is a list of (coefficient function, jump operator) pairs acting as

    L_t(rho) = sum_a  c_a(t) * (L_a rho L_a^dag - (L_a^dag L_a rho + rho L_a^dag L_a) / 2)

and the snapshot map over a short step is kept in first-order form
N = id + epsilon * L_t, never exponentiated: the threshold formulas downstream
are exact for the first-order map and only approximate for exp(epsilon L).

Generators and maps are immutable; evaluation is pure, so grids of instants
can be processed concurrently without shared state.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, NonPositiveEpsilon, ParameterOutOfRange
from .kernel import PAULI_BY_NAME, SIGMA_X, SIGMA_Y, SIGMA_Z, dag, frozen

_KINDS = ("constant", "eternal_tanh", "tabulated", "callable")


@dataclass(frozen=True)
class CoefficientModel:
    """Scalar coefficient c(t) of one Lindblad term.

    kind selects the rule:
      constant      -> value
      eternal_tanh  -> scale * tanh(t)   (default scale -1, the eternally
                       negative coefficient of the benchmark depolarizer)
      tabulated     -> linear interpolation of (times, values); evaluation
                       outside the table domain raises ParameterOutOfRange
      callable      -> func(t)
    """

    kind: str
    value: float = 0.0
    scale: float = -1.0
    times: tuple[float, ...] = ()
    values: tuple[float, ...] = ()
    func: Callable[[float], float] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "tabulated":
            if len(self.times) != len(self.values) or len(self.times) < 2:
                raise ValueError("tabulated coefficient needs >= 2 aligned (time, value) pairs")
            if any(b <= a for a, b in zip(self.times, self.times[1:])):
                raise ValueError("tabulated times must be strictly increasing")
            if not all(math.isfinite(v) for v in self.values):
                raise ValueError("tabulated values must be finite")
        if self.kind == "callable" and self.func is None:
            raise ValueError("callable coefficient needs func")

    def __call__(self, t: float) -> float:
        if self.kind == "constant":
            return self.value
        if self.kind == "eternal_tanh":
            return self.scale * math.tanh(t)
        if self.kind == "tabulated":
            if not self.times[0] <= t <= self.times[-1]:
                raise ParameterOutOfRange(
                    f"t={t:g} outside tabulated domain [{self.times[0]:g}, {self.times[-1]:g}]"
                )
            return float(np.interp(t, self.times, self.values))
        out = float(self.func(t))
        if not math.isfinite(out):
            raise ValueError(f"coefficient evaluated to non-finite value at t={t:g}")
        return out


def constant(value: float) -> CoefficientModel:
    return CoefficientModel(kind="constant", value=float(value))


def eternal_tanh(scale: float = -1.0) -> CoefficientModel:
    return CoefficientModel(kind="eternal_tanh", scale=float(scale))


def tabulated(times, values) -> CoefficientModel:
    return CoefficientModel(
        kind="tabulated",
        times=tuple(float(t) for t in times),
        values=tuple(float(v) for v in values),
    )


def from_callable(func: Callable[[float], float]) -> CoefficientModel:
    return CoefficientModel(kind="callable", func=func)


def _as_coefficient(c) -> CoefficientModel:
    return c if isinstance(c, CoefficientModel) else constant(c)


@dataclass(frozen=True)
class LindbladGenerator:
    """Diagonal-form generator: at most dim^2 (coefficient, jump) terms."""

    dim: int
    terms: tuple[tuple[CoefficientModel, np.ndarray], ...]
    label: str = "custom"

    def __post_init__(self) -> None:
        if len(self.terms) > self.dim**2:
            raise ValueError(f"{len(self.terms)} terms exceed dim^2 = {self.dim ** 2}")
        checked = []
        for coef, jump in self.terms:
            jump = frozen(jump)
            if jump.shape != (self.dim, self.dim):
                raise DimensionMismatch(
                    f"jump operator shape {jump.shape} does not match dim {self.dim}"
                )
            checked.append((_as_coefficient(coef), jump))
        object.__setattr__(self, "terms", tuple(checked))


def dephasing(coefficient=-1.0) -> LindbladGenerator:
    """Single sigma_z term with the given coefficient (default constant -1)."""
    return LindbladGenerator(dim=2, terms=((_as_coefficient(coefficient), SIGMA_Z),), label="dephasing")


def depolarizer(gx, gy, gz) -> LindbladGenerator:
    """Pauli-coefficient generator with terms on sigma_x, sigma_y, sigma_z."""
    terms = (
        (_as_coefficient(gx), SIGMA_X),
        (_as_coefficient(gy), SIGMA_Y),
        (_as_coefficient(gz), SIGMA_Z),
    )
    return LindbladGenerator(dim=2, terms=terms, label="depolarizer")


def eternal_depolarizer() -> LindbladGenerator:
    """The benchmark depolarizer: unit x/y coefficients, z coefficient -tanh(t).

    Its z coefficient is negative for every t > 0 while the full evolution
    stays completely positive, so snapshot indivisibility is present at all
    positive times.
    """
    gen = depolarizer(constant(1.0), constant(1.0), eternal_tanh())
    object.__setattr__(gen, "label", "eternal_depolarizer")
    return gen


def apply_generator(gen: LindbladGenerator, rho: np.ndarray, t: float) -> np.ndarray:
    """L_t(rho): traceless, and Hermitian whenever rho is Hermitian."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (gen.dim, gen.dim):
        raise DimensionMismatch(f"rho shape {rho.shape} does not match generator dim {gen.dim}")
    out = np.zeros_like(rho)
    for coef, L in gen.terms:
        g = coef(t)
        LdL = dag(L) @ L
        out += g * (L @ rho @ dag(L) - 0.5 * (LdL @ rho + rho @ LdL))
    return out


@dataclass(frozen=True)
class SmallTimeMap:
    """First-order snapshot map rho -> rho + epsilon * L_t(rho) at instant t."""

    generator: LindbladGenerator
    t: float
    epsilon: float

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            raise NonPositiveEpsilon(f"epsilon must be > 0, got {self.epsilon!r}")

    @property
    def dim(self) -> int:
        return self.generator.dim

    def apply(self, rho: np.ndarray) -> np.ndarray:
        return np.asarray(rho, dtype=complex) + self.epsilon * apply_generator(
            self.generator, rho, self.t
        )


def small_time_map(gen: LindbladGenerator, t: float, epsilon: float) -> SmallTimeMap:
    return SmallTimeMap(generator=gen, t=float(t), epsilon=float(epsilon))


def extend_and_apply(m: SmallTimeMap, X: np.ndarray) -> np.ndarray:
    """(id (x) N)(X) for a bipartite operator X on the d^2-dimensional space.

    Identity acts on the first factor, the snapshot map on the second.
    Linear in X and Hermiticity-preserving.
    """
    X = np.asarray(X, dtype=complex)
    d = m.dim
    if X.shape != (d * d, d * d):
        raise DimensionMismatch(f"expected shape {(d * d, d * d)}, got {X.shape}")
    eye = np.eye(d)
    acc = np.zeros_like(X)
    for coef, L in m.generator.terms:
        g = coef(m.t)
        E = np.kron(eye, L)
        K = np.kron(eye, dag(L) @ L)
        acc += g * (E @ X @ dag(E) - 0.5 * (K @ X + X @ K))
    return X + m.epsilon * acc


def _jump_from_desc(desc) -> np.ndarray:
    if isinstance(desc, str):
        try:
            return PAULI_BY_NAME[desc.lower()]
        except KeyError:
            raise ValueError(f"unknown jump name {desc!r}; expected sigma_x/sigma_y/sigma_z") from None
    if isinstance(desc, dict) and "matrix" in desc:
        rows = []
        for row in desc["matrix"]:
            entries = []
            for entry in row:
                if isinstance(entry, (list, tuple)):
                    re, im = entry
                    entries.append(complex(re, im))
                else:
                    entries.append(complex(entry))
            rows.append(entries)
        return np.array(rows, dtype=complex)
    raise ValueError(f"jump must be a Pauli name or {{'matrix': ...}}, got {desc!r}")


def _coefficient_from_desc(desc: dict) -> CoefficientModel:
    kind = desc.get("kind")
    if kind == "constant":
        return constant(desc["value"])
    if kind == "eternal_tanh":
        return eternal_tanh(desc.get("scale", -1.0))
    if kind == "tabulated":
        return tabulated(desc["times"], desc["values"])
    raise ValueError(f"unknown coefficient kind {kind!r} in generator description")


def generator_from_dict(desc: dict, label: str = "custom") -> LindbladGenerator:
    """Build a generator from the JSON description format.

    Format: {"dim": d, "terms": [{"coefficient": {...}, "jump": ...}, ...]}
    with jump a case-insensitive Pauli name or {"matrix": [[entry, ...], ...]}
    where each entry is a real number or an [re, im] pair.
    """
    dim = int(desc["dim"])
    terms = tuple(
        (_coefficient_from_desc(term["coefficient"]), _jump_from_desc(term["jump"]))
        for term in desc["terms"]
    )
    return LindbladGenerator(dim=dim, terms=terms, label=label)


def load_generator(path) -> LindbladGenerator:
    """Read a generator description file (JSON) from disk."""
    with open(path, "r", encoding="utf-8") as fh:
        desc = json.load(fh)
    return generator_from_dict(desc, label=f"custom:{path}")
