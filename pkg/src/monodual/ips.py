"""Poisson-driven stochastic flows on product spaces and their time-reversed duals.

A model is a finite family of site maps applied at the jump times of
independent Poisson processes.  A realisation of all jump times and marks on
a window is an event stream; composing the maps in time order gives the
stochastic flow.  Reversing time and replacing every map by its dual gives
the dual flow, and the defining identity

    Psi(X[s,u](x), y) == Psi(x, Y[-u,-s](y))

holds exactly for every realisation, not just in expectation; any violation
is an implementation bug, never noise.

Randomness: a stream generator for (seed) is PCG64 seeded with
SeedSequence(seed); replicate i of a Monte-Carlo side uses
SeedSequence((seed, side, i)), so replicates are independent of scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .product import LiftedDuality, SiteMap, SiteSpace, dual_map, pair_budget

MAX_EXACT_STATES = 10 ** 4


class WindowViolation(ValueError):
    pass


class StateSpaceTooLarge(ValueError):
    pass


class DualityViolation(AssertionError):
    """The pathwise identity failed; carries the witnessing pair and stream."""

    def __init__(self, x, y, stream):
        self.x, self.y, self.stream = x, y, stream
        super().__init__(f"pathwise identity fails at x={x}, y={y}")


@dataclass(frozen=True)
class RateEntry:
    map_id: str
    site_map: SiteMap
    rate: float


@dataclass(frozen=True)
class RateModel:
    space: SiteSpace
    entries: tuple[RateEntry, ...]

    @classmethod
    def build(cls, space: SiteSpace, maps: dict[str, SiteMap], rates: dict[str, float]) -> "RateModel":
        entries = []
        for map_id in sorted(maps):
            rate = float(rates[map_id])
            if not (rate >= 0.0 and math.isfinite(rate)):
                raise ValueError(f"rate for {map_id!r} must be finite and nonnegative")
            if maps[map_id].space != space:
                raise ValueError(f"map {map_id!r} acts on a different space")
            entries.append(RateEntry(map_id, maps[map_id], rate))
        return cls(space, tuple(entries))

    @property
    def total_rate(self) -> float:
        return sum(e.rate for e in self.entries)

    def map_by_id(self, map_id: str) -> SiteMap:
        for e in self.entries:
            if e.map_id == map_id:
                return e.site_map
        raise KeyError(map_id)

    def index_tables(self) -> dict[str, np.ndarray]:
        return {e.map_id: np.asarray(e.site_map.index_table()) for e in self.entries}


@dataclass(frozen=True)
class EventStream:
    """A finite realisation of the marked Poisson set on a time window.

    Events are sorted by (time, map id); generated streams have strictly
    increasing times almost surely, and equal times (possible only for
    hand-built streams at float resolution) are ordered by map id.
    """

    window: tuple[float, float]
    events: tuple[tuple[str, float], ...]
    seed: object = None

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(sorted(self.events, key=lambda e: (e[1], e[0]))))
        s, u = self.window
        if s > u:
            raise WindowViolation(f"empty window {self.window}")
        for _, t in self.events:
            if not s <= t <= u:
                raise WindowViolation(f"event time {t} outside window {self.window}")

    @property
    def n_events(self) -> int:
        return len(self.events)


def sample_event_stream(model: RateModel, window: tuple[float, float], seed) -> EventStream:
    """Marked Poisson sampling: exponential waits at the total rate, marks by rate share."""
    s, u = float(window[0]), float(window[1])
    if s > u:
        raise WindowViolation(f"empty window {window}")
    total = model.total_rate
    events = []
    if total > 0.0:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
        ids = [e.map_id for e in model.entries]
        weights = np.array([e.rate for e in model.entries]) / total
        cum = np.cumsum(weights)
        t = s
        while True:
            t += rng.exponential(1.0 / total)
            if t >= u:
                break
            mark = ids[int(np.searchsorted(cum, rng.random(), side="right"))]
            events.append((mark, t))
    return EventStream(window=(s, u), events=tuple(events), seed=seed)


@dataclass(frozen=True)
class Flow:
    """Random maps X[s,u] read off an event stream.

    convention "+" includes events with s < t <= u (right closed), "-" those
    with s <= t < u (left closed); the two differ only when a sub-window
    boundary cuts exactly through an event time.
    """

    model: RateModel
    stream: EventStream
    convention: str = "+"
    direction: str = "forward"

    def __post_init__(self):
        if self.convention not in ("+", "-"):
            raise ValueError("convention must be '+' or '-'")

    def events_in(self, s: float, u: float):
        lo, hi = self.stream.window
        if not (lo <= s <= u <= hi):
            raise WindowViolation(f"[{s},{u}] not inside stream window [{lo},{hi}]")
        if self.convention == "+":
            return [e for e in self.stream.events if s < e[1] <= u]
        return [e for e in self.stream.events if s <= e[1] < u]


def apply_flow(flow: Flow, x, s: float, u: float) -> tuple[int, ...]:
    """Compose the event maps in increasing time order on one configuration."""
    cfg = tuple(x)
    for map_id, _t in flow.events_in(s, u):
        cfg = flow.model.map_by_id(map_id).apply(cfg)
    return cfg


def flow_index_table(flow: Flow, s: float, u: float) -> np.ndarray:
    """The composed flow as an index table over every configuration at once."""
    arrs = flow.model.index_tables()
    out = np.arange(flow.model.space.n_configs)
    for map_id, _t in flow.events_in(s, u):
        out = arrs[map_id][out]
    return out


def dual_model(model: RateModel, lifted: LiftedDuality) -> RateModel:
    """The same ids and rates with every site map replaced by its dual."""
    rsp = lifted.r_space
    entries = tuple(
        RateEntry(e.map_id, dual_map(lifted, e.site_map), e.rate) for e in model.entries
    )
    return RateModel(rsp, entries)


def dualize_stream(stream: EventStream) -> EventStream:
    """Negate all times and the window; marks keep their ids (bind them to a dual model)."""
    s, u = stream.window
    return EventStream(
        window=(-u, -s),
        events=tuple((mid, -t) for mid, t in stream.events),
        seed=stream.seed,
    )


@dataclass(frozen=True)
class PathwiseReport:
    seed: object
    window: tuple[float, float]
    n_events: int
    coverage: str
    pairs_checked: int
    conventions: tuple[str, ...]
    passed: bool

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "window": list(self.window),
            "n_events": self.n_events,
            "coverage": self.coverage,
            "pairs_checked": self.pairs_checked,
            "conventions": list(self.conventions),
            "passed": self.passed,
        }


def check_pathwise_duality(
    model: RateModel,
    lifted: LiftedDuality,
    window: tuple[float, float],
    seed,
    coverage: str = "exhaustive",
    n_samples: int = 100_000,
    dual: RateModel | None = None,
) -> PathwiseReport:
    """Verify the pathwise identity for one realised stream and its dual.

    Exhaustive coverage checks every configuration pair (within the pair
    budget); sampled coverage draws n_samples pairs.  Both boundary-convention
    pairings are checked.  Raises DualityViolation on the first mismatch.
    """
    if coverage not in ("exhaustive", "sampled"):
        raise ValueError("coverage must be 'exhaustive' or 'sampled'")
    ssp, rsp = lifted.s_space, lifted.r_space
    if model.space != ssp:
        raise ValueError("model does not act on the S side of this duality")
    stream = sample_event_stream(model, window, seed)
    dmodel = dual_model(model, lifted) if dual is None else dual
    dstream = dualize_stream(stream)
    s, u = stream.window

    n_pairs = ssp.n_configs * rsp.n_configs
    exhaustive = coverage == "exhaustive"
    if exhaustive and n_pairs > pair_budget():
        raise StateSpaceTooLarge(
            f"{n_pairs} configuration pairs exceed the budget; use coverage='sampled'"
        )
    if max(ssp.n_configs, rsp.n_configs) > pair_budget():
        raise StateSpaceTooLarge("one side alone exceeds the pair budget")

    checked = 0
    for conv in ("+", "-"):
        other = "-" if conv == "+" else "+"
        X = flow_index_table(Flow(model, stream, conv), s, u)
        Y = flow_index_table(Flow(dmodel, dstream, other, direction="dual-reversed"), -u, -s)
        if exhaustive:
            psi_big = np.array(
                [[lifted.evaluate(xs, ys) for ys in rsp.configs()] for xs in ssp.configs()]
            )
            lhs = psi_big[X]
            rhs = psi_big[:, Y]
            if not np.array_equal(lhs, rhs):
                xi, yi = np.argwhere(lhs != rhs)[0]
                raise DualityViolation(ssp.config_of(int(xi)), rsp.config_of(int(yi)), stream)
            checked += n_pairs
        else:
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, 2))))
            xi = rng.integers(0, ssp.n_configs, size=n_samples)
            yi = rng.integers(0, rsp.n_configs, size=n_samples)
            for a, b in zip(xi, yi):
                x_cfg, y_cfg = ssp.config_of(int(a)), rsp.config_of(int(b))
                lhs = lifted.evaluate(ssp.config_of(int(X[a])), y_cfg)
                rhs = lifted.evaluate(x_cfg, rsp.config_of(int(Y[b])))
                if lhs != rhs:
                    raise DualityViolation(x_cfg, y_cfg, stream)
            checked += n_samples
    return PathwiseReport(
        seed=seed,
        window=stream.window,
        n_events=stream.n_events,
        coverage=coverage,
        pairs_checked=checked,
        conventions=("+-", "-+"),
        passed=True,
    )


@dataclass(frozen=True)
class ExpectationEstimate:
    lhs: float
    lhs_stderr: float
    rhs: float
    rhs_stderr: float
    replicates: int
    consistent: bool = field(compare=False, default=True)

    @property
    def combined_stderr(self) -> float:
        return math.sqrt(self.lhs_stderr ** 2 + self.rhs_stderr ** 2)

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "lhs_stderr": self.lhs_stderr,
            "rhs": self.rhs,
            "rhs_stderr": self.rhs_stderr,
            "replicates": self.replicates,
            "combined_stderr": self.combined_stderr,
            "consistent": self.consistent,
        }


def _endpoint_sampler(model: RateModel, start_idx: int, t: float, rng) -> int:
    """Final state index after running the model for time t from one start.

    Conditionally on the event count the time-ordered marks are an iid
    sequence, so sampling the count and then the marks reproduces the law of
    the flow endpoint without materialising timestamps.
    """
    total = model.total_rate
    if total == 0.0 or t == 0.0:
        return start_idx
    n = rng.poisson(total * t)
    if n == 0:
        return start_idx
    weights = np.array([e.rate for e in model.entries]) / total
    cum = np.cumsum(weights)
    marks = np.searchsorted(cum, rng.random(n), side="right")
    arrs = [np.asarray(e.site_map.index_table()) for e in model.entries]
    idx = start_idx
    for m in marks:
        idx = int(arrs[m][idx])
    return idx


def _mc_side(model, values, start_idx, t, replicates, seed, side) -> tuple[float, float]:
    total = model.total_rate
    weights = np.array([e.rate for e in model.entries])
    cum = np.cumsum(weights / total) if total > 0 else None
    arrs = [np.asarray(e.site_map.index_table()) for e in model.entries]
    out = np.empty(replicates)
    for i in range(replicates):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, side, i))))
        idx = start_idx
        if total > 0.0 and t > 0.0:
            n = rng.poisson(total * t)
            if n:
                marks = np.searchsorted(cum, rng.random(n), side="right")
                for m in marks:
                    idx = arrs[m][idx]
        out[i] = values[idx]
    mean = float(out.mean())
    se = float(out.std(ddof=1) / math.sqrt(replicates)) if replicates > 1 else 0.0
    return mean, se


def estimate_expectation_duality(
    model: RateModel,
    lifted: LiftedDuality,
    x,
    y,
    t: float,
    replicates: int,
    seed,
    dual: RateModel | None = None,
) -> ExpectationEstimate:
    """Independent Monte-Carlo estimates of E[Psi(X_t^x, y)] and E[Psi(x, Y_t^y)].

    Requires a real embedding on the value monoid.  The two sides use disjoint
    replicate seed namespaces; the estimate is flagged consistent when the
    estimates agree within four combined standard errors.
    """
    if lifted.real_embedding is None:
        from .product import NoRealEmbedding

        raise NoRealEmbedding("expectation duality needs a declared real embedding")
    if t < 0:
        raise ValueError("time must be nonnegative")
    ssp, rsp = lifted.s_space, lifted.r_space
    x, y = tuple(x), tuple(y)
    dmodel = dual_model(model, lifted) if dual is None else dual
    f_lhs = np.array([lifted.evaluate_embedded(xs, y) for xs in ssp.configs()])
    f_rhs = np.array([lifted.evaluate_embedded(x, ys) for ys in rsp.configs()])
    lhs, lhs_se = _mc_side(model, f_lhs, ssp.index_of(x), t, replicates, seed, 0)
    rhs, rhs_se = _mc_side(dmodel, f_rhs, rsp.index_of(y), t, replicates, seed, 1)
    comb = math.sqrt(lhs_se ** 2 + rhs_se ** 2)
    consistent = abs(lhs - rhs) <= 4.0 * comb if comb > 0 else lhs == rhs
    return ExpectationEstimate(
        lhs=lhs,
        lhs_stderr=lhs_se,
        rhs=rhs,
        rhs_stderr=rhs_se,
        replicates=replicates,
        consistent=consistent,
    )


def exact_semigroup_expectation(
    model: RateModel,
    lifted: LiftedDuality,
    x,
    y,
    t: float,
    tol: float = 1e-12,
    evolving: str = "s",
) -> float:
    """E[Psi(X_t, y)] by uniformisation of the finite-state jump chain.

    The series over jump counts is truncated as soon as the remaining Poisson
    tail mass times max|f| drops below tol, so the truncation error is
    certified.  With evolving="r", the model must act on the R side and the
    roles of x and y swap (the second argument evolves from y).
    """
    x, y = tuple(x), tuple(y)
    if evolving not in ("s", "r"):
        raise ValueError("evolving must be 's' or 'r'")
    space = lifted.s_space if evolving == "s" else lifted.r_space
    if model.space != space:
        raise ValueError("model does not act on the evolving side")
    if space.n_configs > MAX_EXACT_STATES:
        raise StateSpaceTooLarge(f"{space.n_configs} states exceed {MAX_EXACT_STATES}")
    if lifted.real_embedding is None:
        from .product import NoRealEmbedding

        raise NoRealEmbedding("exact expectations need a declared real embedding")
    if evolving == "s":
        values = np.array([lifted.evaluate_embedded(xs, y) for xs in space.configs()])
        start = space.index_of(x)
    else:
        values = np.array([lifted.evaluate_embedded(x, ys) for ys in space.configs()])
        start = space.index_of(y)

    total = model.total_rate
    if total == 0.0 or t == 0.0:
        return float(values[start])
    arrs = [np.asarray(e.site_map.index_table()) for e in model.entries]
    weights = [e.rate / total for e in model.entries]
    fmax = float(np.max(np.abs(values))) or 1.0
    lam = total * float(t)
    v = values
    w = math.exp(-lam)
    acc = w * v[start]
    mass = w
    k = 0
    while (1.0 - mass) * fmax >= tol:
        k += 1
        if k > 10 ** 7:
            raise RuntimeError("uniformisation failed to converge")
        nv = np.zeros_like(v)
        for arr, wt in zip(arrs, weights):
            nv += wt * v[arr]
        v = nv
        w *= lam / k
        acc += w * v[start]
        mass += w
    return float(acc)
