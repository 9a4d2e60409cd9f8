"""Product monoids, matrix site maps, lifted dualities and dual-map construction.

Maps between product spaces are always carried as a matrix of local maps: a
global homomorphism m on S^k is determined by entries M[i][j] in H(S, S) via
m(x)_j = sum_i M[i][j](x_i), with the sum taken in S.  The matrix form is what
makes dual maps cheap: the dual of m has matrix entries dual(M[i][j]) placed
at the transposed position.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import product as iproduct

from .algebra import Lattice, Monoid, Semiring, dual_lattice, lattice_join_monoid
from .homdual import DualityFunction, VerificationRecord, is_homomorphism, verify_duality
from .tables import CayleyTable

DEFAULT_PAIR_BUDGET = 10 ** 6


def pair_budget() -> int:
    return int(os.environ.get("MONODUAL_PAIR_BUDGET", DEFAULT_PAIR_BUDGET))


class SizeBudgetExceeded(ValueError):
    pass


class NoDual(ValueError):
    pass


class NoRealEmbedding(ValueError):
    pass


@dataclass(frozen=True)
class SiteSpace:
    """A finite product S^k of copies of one local monoid."""

    local: Monoid
    sites: int

    @property
    def n_configs(self) -> int:
        return self.local.order ** self.sites

    def configs(self):
        return iproduct(range(self.local.order), repeat=self.sites)

    def index_of(self, config) -> int:
        n = self.local.order
        idx = 0
        for x in config:
            idx = idx * n + x
        return idx

    def config_of(self, index: int) -> tuple[int, ...]:
        n = self.local.order
        out = []
        for _ in range(self.sites):
            out.append(index % n)
            index //= n
        return tuple(reversed(out))

    def neutral_config(self) -> tuple[int, ...]:
        return tuple(self.local.neutral for _ in range(self.sites))


@dataclass(frozen=True)
class SiteMap:
    """A homomorphism S^k -> S^k in matrix form; matrix[i][j] feeds site i into site j."""

    space: SiteSpace
    matrix: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_matrix(cls, space: SiteSpace, matrix) -> "SiteMap":
        k = space.sites
        rows = tuple(tuple(tuple(entry) for entry in row) for row in matrix)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise ValueError(f"matrix must be {k}x{k}")
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if not is_homomorphism(space.local, space.local, entry):
                    raise ValueError(f"matrix entry ({i},{j}) is not a local homomorphism")
        return cls(space, rows)

    @classmethod
    def diagonal(cls, space: SiteSpace, entry) -> "SiteMap":
        zero = tuple(space.local.neutral for _ in range(space.local.order))
        k = space.sites
        return cls.from_matrix(
            space,
            [[tuple(entry) if i == j else zero for j in range(k)] for i in range(k)],
        )

    @classmethod
    def identity(cls, space: SiteSpace) -> "SiteMap":
        return cls.diagonal(space, tuple(range(space.local.order)))

    def apply(self, config) -> tuple[int, ...]:
        add = self.space.local.rows
        k = self.space.sites
        out = []
        for j in range(k):
            acc = self.space.local.neutral
            for i in range(k):
                acc = add[acc][self.matrix[i][j][config[i]]]
            out.append(acc)
        return tuple(out)

    def index_table(self) -> list[int]:
        """The map as a permutation-style table on configuration indices."""
        sp = self.space
        return [sp.index_of(self.apply(c)) for c in sp.configs()]

    def to_json(self) -> str:
        return json.dumps([[list(e) for e in row] for row in self.matrix])

    @classmethod
    def from_json(cls, space: SiteSpace, text: str) -> "SiteMap":
        return cls.from_matrix(space, json.loads(text))


def product_monoid(local: Monoid, k: int, budget: int | None = None) -> Monoid:
    """The k-fold product with componentwise addition, as an explicit table."""
    return product_monoid_many([local] * k, budget)


def product_monoid_many(locals_, budget: int | None = None) -> Monoid:
    """Componentwise product of possibly different monoids."""
    budget = pair_budget() if budget is None else budget
    size = 1
    for m in locals_:
        size *= m.order
    if size * size > budget:
        raise SizeBudgetExceeded(f"product table needs {size * size} cells")
    states = list(iproduct(*(range(m.order) for m in locals_)))
    index = {s: i for i, s in enumerate(states)}
    rows = tuple(
        tuple(
            index[tuple(m.add(a[i], b[i]) for i, m in enumerate(locals_))]
            for b in states
        )
        for a in states
    )
    neutral = index[tuple(m.neutral for m in locals_)]
    return Monoid(CayleyTable(rows), neutral)


def global_hom_set_matrix_check(space: SiteSpace, f):
    """Recover the matrix form of a map S^k -> S^k, or None if it is no homomorphism.

    ``f`` is a callable on configurations.  The candidate matrix is read off
    from single-site configurations and then required to reproduce f on every
    configuration; any additive defect shows up in one of the two steps.
    """
    local = space.local
    k = space.sites
    zero = space.neutral_config()
    if tuple(f(zero)) != zero:
        return None
    matrix = []
    for i in range(k):
        row = []
        for j in range(k):
            entry = []
            for x in range(local.order):
                cfg = list(zero)
                cfg[i] = x
                entry.append(f(tuple(cfg))[j])
            row.append(tuple(entry))
        matrix.append(tuple(row))
    for i in range(k):
        for j in range(k):
            if not is_homomorphism(local, local, matrix[i][j]):
                return None
    sm = SiteMap(space, tuple(matrix))
    for cfg in space.configs():
        if sm.apply(cfg) != tuple(f(cfg)):
            return None
    return sm


@dataclass(frozen=True)
class LiftedDuality:
    """A local duality table summed sitewise over a product space.

    The evaluation contract is Psi(x, y) = sum_i psi(x_i, y_i) with the sum in
    T.  ``module_source`` is set when the table came from a semiring product
    (then the dualizable maps are the left-module maps rather than all of
    H(S, S), and the local table need not be a monoid duality function).
    """

    local: DualityFunction
    sites: int
    real_embedding: tuple[float, ...] | None = None
    module_source: Semiring | None = None

    @property
    def s_space(self) -> SiteSpace:
        return SiteSpace(self.local.s, self.sites)

    @property
    def r_space(self) -> SiteSpace:
        return SiteSpace(self.local.r, self.sites)

    def evaluate(self, xs, ys) -> int:
        t = self.local.t
        acc = t.neutral
        rows = self.local.values
        for x, y in zip(xs, ys):
            acc = t.add(acc, rows[x][y])
        return acc

    def evaluate_embedded(self, xs, ys) -> float:
        if self.real_embedding is None:
            raise NoRealEmbedding("no real embedding declared for the value monoid")
        return self.real_embedding[self.evaluate(xs, ys)]

    def column_index(self) -> dict[tuple[int, ...], int]:
        return {self.local.column(y): y for y in range(self.local.r.order)}

    def local_dual(self, values):
        """The unique local map with psi(M(x), y) = psi(x, Mhat(y)), or None."""
        cols = self.column_index()
        rows = self.local.values
        ns = self.local.s.order
        out = []
        for y in range(self.local.r.order):
            col = tuple(rows[values[x]][y] for x in range(ns))
            w = cols.get(col)
            if w is None:
                return None
            out.append(w)
        return tuple(out)

    def big_values(self, budget: int | None = None):
        """The full product-level table over all configuration pairs."""
        budget = pair_budget() if budget is None else budget
        ssp, rsp = self.s_space, self.r_space
        if ssp.n_configs * rsp.n_configs > budget:
            raise SizeBudgetExceeded("product-level table exceeds the pair budget")
        return tuple(
            tuple(self.evaluate(xs, ys) for ys in rsp.configs()) for xs in ssp.configs()
        )


def lift_duality(
    local: DualityFunction,
    sites: int,
    real_embedding: tuple[float, ...] | None = None,
    reverify: bool = True,
) -> LiftedDuality:
    """Lift a verified local duality to S^k x R^k.

    For small instances (k <= 3 with carriers of order <= 3) the four duality
    conditions are re-checked exhaustively at the product level instead of
    being taken on faith from the local verification.
    """
    if local.verified is None or not local.verified.all_passed:
        verify_duality(local)
        local = DualityFunction(local.s, local.r, local.t, local.values,
                                VerificationRecord(True, True, True, True))
    if real_embedding is not None:
        _check_real_embedding(local.t, real_embedding)
    lifted = LiftedDuality(local, sites, real_embedding)
    small = sites <= 3 and max(local.s.order, local.r.order, local.t.order) <= 3
    if reverify and small:
        big = DualityFunction(
            product_monoid(local.s, sites),
            product_monoid(local.r, sites),
            local.t,
            lifted.big_values(),
        )
        verify_duality(big)
    return lifted


def _check_real_embedding(t: Monoid, emb) -> None:
    if len(emb) != t.order or len(set(emb)) != t.order:
        raise NoRealEmbedding("embedding must be injective on the value monoid")
    for a in range(t.order):
        for b in range(t.order):
            if abs(emb[t.add(a, b)] - emb[a] * emb[b]) > 1e-12:
                raise NoRealEmbedding(f"embedding not multiplicative at ({a},{b})")


def dual_map(
    lifted: LiftedDuality, m: SiteMap, budget: int | None = None, samples: int = 100_000
) -> SiteMap:
    """The unique site map with Psi(m(x), y) = Psi(x, mhat(y)) for all pairs.

    Built entrywise from local duals and transposed; the defining identity is
    then re-checked on every configuration pair within the budget, and on
    ``samples`` deterministically drawn pairs beyond it.
    """
    k = lifted.sites
    if m.space.sites != k or m.space.local.op != lifted.local.s.op:
        raise ValueError("site map does not act on the S side of this duality")
    duals = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            d = lifted.local_dual(m.matrix[i][j])
            if d is None:
                raise NoDual(f"matrix entry ({i},{j}) admits no local dual")
            duals[i][j] = d
    rsp = lifted.r_space
    mhat = SiteMap(rsp, tuple(tuple(duals[i][j] for i in range(k)) for j in range(k)))
    budget = pair_budget() if budget is None else budget
    if m.space.n_configs * rsp.n_configs <= budget:
        for xs in m.space.configs():
            mx = m.apply(xs)
            for ys in rsp.configs():
                if lifted.evaluate(mx, ys) != lifted.evaluate(xs, mhat.apply(ys)):
                    raise AssertionError(f"dual-map identity fails at {xs}, {ys}")
    else:
        import numpy as np

        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(0)))
        for _ in range(samples):
            xs = m.space.config_of(int(rng.integers(m.space.n_configs)))
            ys = rsp.config_of(int(rng.integers(rsp.n_configs)))
            if lifted.evaluate(m.apply(xs), ys) != lifted.evaluate(xs, mhat.apply(ys)):
                raise AssertionError(f"dual-map identity fails at {xs}, {ys}")
    return mhat


def semiring_inner_duality(
    s: Semiring,
    sites: int,
    real_embedding: tuple[float, ...] | None = None,
    reverify: bool = True,
) -> LiftedDuality:
    """The pairing Psi(x, y) = sum_i x_i * y_i of a semiring product space.

    This is generally not a monoid duality function (the dualizable maps are
    the left-module maps, which may be a proper subset of the additive
    homomorphisms); for small instances its four module-level separation and
    surjectivity properties are verified by brute force over all functions.
    """
    add = s.add
    local = DualityFunction(add, add, add, s.mul.rows)
    if real_embedding is not None:
        _check_real_embedding(add, real_embedding)
    lifted = LiftedDuality(local, sites, real_embedding, module_source=s)
    if reverify and s.order ** (s.order ** sites) <= 10 ** 6:
        rec = verify_module_duality(lifted)
        if not rec.all_passed:
            raise AssertionError("module duality conditions failed")
    return lifted


def module_maps(s: Semiring, side: str = "left") -> list[tuple[int, ...]]:
    """All maps S -> S that are additive and commute with scalars on one side."""
    add, mul = s.add.rows, s.mul.rows
    n = s.order
    out = []
    for vals in iproduct(range(n), repeat=n):
        if not is_homomorphism(s.add, s.add, vals):
            continue
        if side == "left":
            ok = all(vals[mul[a][x]] == mul[a][vals[x]] for a in range(n) for x in range(n))
        else:
            ok = all(vals[mul[x][a]] == mul[vals[x]][a] for a in range(n) for x in range(n))
        if ok:
            out.append(vals)
    return out


def verify_module_duality(lifted: LiftedDuality) -> VerificationRecord:
    """Brute-force check of the four module-level pairing properties."""
    s = lifted.module_source
    if s is None:
        raise ValueError("not a semiring-derived pairing")
    add, mul = s.add.rows, s.mul.rows
    sp = lifted.s_space
    configs = list(sp.configs())
    big = [[lifted.evaluate(xs, ys) for ys in configs] for xs in configs]
    rows_distinct = len({tuple(r) for r in big}) == len(configs)
    cols = {tuple(big[i][j] for i in range(len(configs))) for j in range(len(configs))}
    cols_distinct = len(cols) == len(configs)

    def config_add(a, b):
        return tuple(add[x][y] for x, y in zip(a, b))

    def scale(a, ys, left: bool):
        return tuple(mul[a][y] if left else mul[y][a] for y in ys)

    left_maps = set()
    right_maps = set()
    for vals in iproduct(range(s.order), repeat=len(configs)):
        additive = all(
            vals[sp.index_of(config_add(a, b))] == add[vals[i]][vals[j]]
            for i, a in enumerate(configs)
            for j, b in enumerate(configs)
        )
        if not additive:
            continue
        if all(
            vals[sp.index_of(scale(c, ys, True))] == mul[c][vals[i]]
            for c in range(s.order)
            for i, ys in enumerate(configs)
        ):
            left_maps.add(vals)
        if all(
            vals[sp.index_of(scale(c, ys, False))] == mul[vals[i]][c]
            for c in range(s.order)
            for i, ys in enumerate(configs)
        ):
            right_maps.add(vals)
    col_tables = {
        tuple(big[i][j] for i in range(len(configs))) for j in range(len(configs))
    }
    row_tables = {tuple(r) for r in big}
    return VerificationRecord(
        rows_distinct=rows_distinct,
        columns_are_hom_set=col_tables == left_maps,
        columns_distinct=cols_distinct,
        rows_are_hom_set=row_tables == right_maps,
    )


def lattice_duality_function(lat: Lattice) -> DualityFunction:
    """The indicator table of the lattice order, a duality into the two-point join monoid.

    Rows are indexed by the lattice, columns by its order-reversed dual (same
    carrier, star bijection the identity); the entry is 0 when x lies below
    the column's image and 1 otherwise.
    """
    from . import catalog

    s = lattice_join_monoid(lat)
    rev, _star = dual_lattice(lat)
    r = lattice_join_monoid(rev)
    t = catalog.monoid("M1")
    n = lat.order
    values = tuple(
        tuple(0 if lat.leq[x][y] else 1 for y in range(n)) for x in range(n)
    )
    psi = DualityFunction(s, r, t, values)
    return DualityFunction(s, r, t, values, verify_duality(psi))
