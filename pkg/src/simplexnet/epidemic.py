"""SI (susceptible-infectious) spreading for synthetic attacker labelings.

The expected number of infectious individuals follows the logistic curve

    g(t) = N / (1 + c exp(-r t)),   f(t) = N - g(t) = N / (1 + exp(r t) / c),

with ``c = N / g0 - 1`` and rate ``r = P * lam / N`` (``lam`` the average
contact number). The
stochastic step turns the expected increase into a concrete set of newly
infected vertices, drawn uniformly among susceptibles with an infectious
neighbour.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .complex import Graph

ROUNDING = {
    "floor": math.floor,
    "ceil": math.ceil,
    "round": lambda x: math.floor(x + 0.5),  # half-up, not banker's rounding
}


class SIError(ValueError):
    pass


@dataclass(frozen=True)
class SIParams:
    """Parameters of the SI model.

    Exactly one of ``lam`` (average contact number) or ``r`` (explicit rate)
    must be given.
    """

    N: int
    g0: int
    P: float = 0.0
    lam: float | None = None
    r: float | None = None
    rounding: str = "round"

    def __post_init__(self):
        if not 0 < self.g0 <= self.N:
            raise SIError(f"need 0 < g0 <= N, got g0={self.g0}, N={self.N}")
        if not 0 <= self.P <= 1:
            raise SIError(f"infection probability must lie in [0, 1], got {self.P}")
        if (self.lam is None) == (self.r is None):
            raise SIError("give exactly one of lam (average contact number) or r (explicit rate)")
        if self.rounding not in ROUNDING:
            raise SIError(f"rounding must be one of {sorted(ROUNDING)}, got {self.rounding!r}")
        if self.r is not None and not self.r > 0:
            raise SIError(f"explicit rate must be positive, got {self.r}")
        if self.lam is not None and not self.lam > 0:
            raise SIError(f"average contact number must be positive, got {self.lam}")


def params_from_graph(
    g: Graph, g0: int, P: float, r: float | None = None, rounding: str = "round"
) -> SIParams:
    """SI parameters for ``g``; ``lam`` defaults to the mean vertex degree."""
    n = len(g.vertices)
    if r is not None:
        return SIParams(N=n, g0=g0, P=P, r=r, rounding=rounding)
    lam = 2 * len(g.edges) / n if n else 0.0
    return SIParams(N=n, g0=g0, P=P, lam=lam, rounding=rounding)


def infection_rate(params: SIParams) -> float:
    if params.r is not None:
        return params.r
    r = params.P * params.lam / params.N
    if not r > 0:
        raise SIError(f"infection rate P * lam / N = {r} is not positive")
    return r


def expected_infected(params: SIParams, t: float) -> float:
    if t == 0:
        return float(params.g0)
    r = infection_rate(params)
    n = params.N
    return n / (1 + (n / params.g0 - 1) * math.exp(-r * t))


def expected_susceptible(params: SIParams, t: float) -> float:
    if t == 0:
        return float(params.N - params.g0)
    r = infection_rate(params)
    n = params.N
    c = n / params.g0 - 1
    if c == 0:
        return 0.0
    # N - g(t) = N / (1 + e^{rt} / c), written to avoid overflow for large t
    x = math.log(c) - r * t
    if x < 0:
        e = math.exp(x)
        return n * e / (1 + e)
    return n / (1 + math.exp(-x))


@dataclass(frozen=True)
class SIState:
    """Partition of the vertices at integer time ``t``.

    ``shortfall`` counts infections the expected curve asked for but the
    graph could not deliver (too few susceptible neighbours).
    """

    infectious: frozenset[int]
    susceptible: frozenset[int]
    t: int = 0
    shortfall: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.infectious & self.susceptible:
            raise SIError("infectious and susceptible sets overlap")

    @property
    def stalled(self) -> bool:
        return self.shortfall > 0

    def to_record(self, params: SIParams) -> dict:
        return {
            "t": self.t,
            "infectious_ids": sorted(self.infectious),
            "g_expected": expected_infected(params, self.t),
            "shortfall": self.shortfall,
        }


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def initial_state(g: Graph, k: int, rng_seed=None) -> SIState:
    """Choose ``k`` initial attackers uniformly at random."""
    vs = sorted(g.vertices)
    if not 0 < k <= len(vs):
        raise SIError(f"cannot pick {k} initial attackers from {len(vs)} vertices")
    rng = _rng(rng_seed)
    picked = rng.choice(vs, size=k, replace=False)
    inf = frozenset(int(v) for v in picked)
    return SIState(inf, frozenset(vs) - inf, 0)


def simulate_step(g: Graph, state: SIState, params: SIParams, rng_seed=None) -> SIState:
    """Advance one time unit.

    The target count is ``round(g(t+1)) - |infectious|`` under the configured
    rounding; new attackers are drawn without replacement from susceptible
    vertices adjacent to an infectious one. ``rng_seed`` may be an int or a
    ``numpy.random.Generator`` (shared across steps by :func:`run`).
    """
    if state.infectious | state.susceptible != g.vertices:
        raise SIError("state does not partition the graph's vertices")
    rng = _rng(rng_seed)
    goal = ROUNDING[params.rounding](expected_infected(params, state.t + 1))
    target = max(0, min(goal, len(g.vertices)) - len(state.infectious))
    if target == 0:
        return SIState(state.infectious, state.susceptible, state.t + 1)
    nbrs = g.neighbors()
    pool = sorted(v for v in state.susceptible if nbrs[v] & state.infectious)
    if len(pool) <= target:
        chosen = pool
    else:
        chosen = [int(v) for v in rng.choice(pool, size=target, replace=False)]
    inf = state.infectious | frozenset(chosen)
    return SIState(inf, state.susceptible - inf, state.t + 1, shortfall=target - len(chosen))


def run(
    g: Graph, params: SIParams, steps: int, rng_seed=None, initial: SIState | None = None
) -> list[SIState]:
    """States for t = 0 .. steps (the initial state included).

    Without ``initial`` the ``params.g0`` starting attackers are drawn from the
    same generator before spreading begins.
    """
    if steps < 1:
        raise SIError(f"steps must be at least 1, got {steps}")
    rng = _rng(rng_seed)
    state = initial if initial is not None else initial_state(g, params.g0, rng)
    states = [state]
    for _ in range(steps):
        state = simulate_step(g, state, params, rng)
        states.append(state)
    return states
