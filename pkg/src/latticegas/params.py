"""Model parameters, regime validation and derived constants.

The model is a two-dimensional lattice gas on a periodic torus with binding
energy U between neighbouring particles and activation energy Delta per
particle, run at inverse temperature beta.  Everything else used by the
simulator (critical droplet length, resistances, time scales, window sizes)
is derived from (U, Delta, beta) plus the small regularity parameters
(alpha, d, delta) and is computed once here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import DomainError, RegimeError

#: absolute tolerance for energy comparisons; energies are integer
#: combinations of U and Delta, so this is safe.
ENERGY_ATOL = 1e-9

CONFIG_KEYS = ("U", "Delta", "beta", "Theta", "alpha", "d", "delta",
               "Cstar", "lambda", "L", "seed")


def lambda_of_beta(beta: float, choice: str = "sqrt_log") -> float:
    """Slowly growing cluster-count scale lambda(beta).

    ``choice`` is one of ``sqrt_log`` (default), ``log`` or ``const:<v>``.
    """
    if choice == "sqrt_log":
        return math.sqrt(math.log(beta))
    if choice == "log":
        return math.log(beta)
    if choice.startswith("const:"):
        return float(choice.split(":", 1)[1])
    raise DomainError(f"unknown lambda choice {choice!r}")


@dataclass(frozen=True)
class ModelParams:
    """Model parameters; immutable, safe to share across workers.

    alpha, d and delta default to eps/20, eps/10 and eps/10 with
    eps = 2U - Delta; the model only needs them small and positive.
    """

    U: float = 1.0
    Delta: float = 1.6
    beta: float = 4.0
    Theta: float = 1.7
    alpha: float | None = None
    d: float | None = None
    delta: float | None = None
    Cstar: float = 6.0
    lambda_choice: str = "sqrt_log"

    def __post_init__(self):
        if self.U <= 0 or self.beta <= 0:
            raise RegimeError("U and beta must be positive")
        if not (1.5 * self.U < self.Delta < 2.0 * self.U):
            raise RegimeError(
                f"Delta={self.Delta} outside (3U/2, 2U)=({1.5*self.U}, {2*self.U})")
        eps = 2.0 * self.U - self.Delta
        if self.alpha is None:
            object.__setattr__(self, "alpha", eps / 20.0)
        if self.d is None:
            object.__setattr__(self, "d", eps / 10.0)
        if self.delta is None:
            object.__setattr__(self, "delta", eps / 10.0)
        if min(self.alpha, self.d, self.delta) <= 0:
            raise RegimeError("alpha, d, delta must be positive")
        if self.Cstar <= 0:
            raise RegimeError("Cstar must be positive")

    @property
    def lam(self) -> float:
        return lambda_of_beta(self.beta, self.lambda_choice)

    def validate(self) -> "ModelParams":
        """Full validation for simulation use (stricter than construction)."""
        c = derive_constants(self)
        eps = c.eps
        for name, v in (("alpha", self.alpha), ("d", self.d), ("delta", self.delta)):
            if not (0 < v < eps / 4):
                raise RegimeError(f"{name}={v} not in (0, eps/4) with eps={eps}")
        if c.iota <= ENERGY_ATOL or c.iota >= 1 - ENERGY_ATOL:
            raise RegimeError(f"iota={c.iota} must lie strictly in (0,1)")
        if not (self.Delta < self.Theta <= c.theta + ENERGY_ATOL):
            raise RegimeError(
                f"Theta={self.Theta} outside (Delta, theta]=({self.Delta}, {c.theta}]")
        if self.Cstar < 2 * self.Delta:
            raise RegimeError("Cstar too small to dominate the derived scales")
        return self

    def with_beta(self, beta: float) -> "ModelParams":
        return replace(self, beta=beta)


@dataclass(frozen=True)
class DerivedConstants:
    """Constants derived from ModelParams.

    eps = 2U - Delta; lc = ceil(U/eps) is the critical droplet side;
    gamma = Delta - U - (lc - 2) eps; theta = 2 Delta - U - gamma is the
    resistance of the largest subcritical quasi-square; D = U + d;
    delta_plus = Delta + alpha; S = (4 Delta - theta)/3 - alpha;
    iota = lc - U/eps in (0,1).
    """

    eps: float
    lc: int
    gamma: float
    theta: float
    D: float
    delta_plus: float
    S: float
    iota: float


def derive_constants(p: ModelParams) -> DerivedConstants:
    """Compute every derived constant, validating the regime."""
    eps = 2.0 * p.U - p.Delta
    # guard against ceil(k + tiny) artifacts when U/eps is numerically integral
    ratio = p.U / eps
    lc = math.ceil(ratio - ENERGY_ATOL)
    if lc <= 2:
        raise RegimeError(f"critical length lc={lc} <= 2 (Delta too small)")
    gamma = p.Delta - p.U - (lc - 2) * eps
    if gamma <= ENERGY_ATOL:
        raise RegimeError(f"gamma={gamma} not positive")
    theta = 2.0 * p.Delta - p.U - gamma
    if not (p.Delta < p.Theta <= theta + ENERGY_ATOL):
        raise RegimeError(
            f"Theta={p.Theta} outside (Delta, theta]=({p.Delta}, {theta}]")
    return DerivedConstants(
        eps=eps,
        lc=lc,
        gamma=gamma,
        theta=theta,
        D=p.U + p.d,
        delta_plus=p.Delta + p.alpha,
        S=(4.0 * p.Delta - theta) / 3.0 - p.alpha,
        iota=lc - ratio,
    )


def is_quasi_square(l1: int, l2: int) -> bool:
    """Shape test: l1 x l2 with l1 <= l2 <= l1 + 1."""
    return 0 <= l1 <= l2 <= l1 + 1


def resistance(l1: int, l2: int, c: DerivedConstants, p: ModelParams) -> float:
    """Resistance exponent of an l1 x l2 quasi-square; (0,0) is the gas state.

    r(l1,l2) = min{(l1-2) eps + 2U, 2 Delta - U}; r(0,0) = 4 Delta - 2U - theta.
    """
    if l1 == 0 and l2 == 0:
        return 4.0 * p.Delta - 2.0 * p.U - c.theta
    if not is_quasi_square(l1, l2) or l1 < 2:
        raise DomainError(f"({l1},{l2}) is not a quasi-square shape with l1>=2")
    return min((l1 - 2) * c.eps + 2.0 * p.U, 2.0 * p.Delta - p.U)


def timescale(C: float, beta: float) -> float:
    """The exponential time scale e^{C beta}."""
    if C < 0:
        raise DomainError("timescale exponent must be >= 0")
    return math.exp(C * beta)


def side_of_volume(exponent: float, beta: float) -> int:
    """Integer side of a square window of volume e^{exponent * beta}."""
    return max(1, int(math.floor(math.exp(exponent * beta / 2.0))))


def fatten_radius(exponent: float, beta: float) -> int:
    """Integer radius e^{exponent * beta / 2} used for ball-fattened regions."""
    return max(1, int(math.floor(math.exp(exponent * beta / 2.0))))


# ---------------------------------------------------------------------------
# flat key-value config files


def parse_config(text: str) -> dict:
    """Parse a flat key-value config (``key = value`` or ``key value`` lines,
    ``#`` comments).  Returns raw string values keyed by name."""
    out: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, val = line.split("=", 1)
        else:
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise DomainError(f"cannot parse config line {raw!r}")
            key, val = parts
        out[key.strip()] = val.strip()
    return out


def params_from_config(cfg: dict, **overrides) -> ModelParams:
    """Build ModelParams from a parsed config dict plus keyword overrides."""
    kw = {}
    mapping = {"U": "U", "Delta": "Delta", "beta": "beta", "Theta": "Theta",
               "alpha": "alpha", "d": "d", "delta": "delta", "Cstar": "Cstar"}
    for key, attr in mapping.items():
        if key in cfg:
            kw[attr] = float(cfg[key])
    if "lambda" in cfg:
        kw["lambda_choice"] = cfg["lambda"]
    kw.update(overrides)
    return ModelParams(**kw)
