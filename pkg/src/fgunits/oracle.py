"""Brute-force verification by explicit enumeration of unit groups.

Nothing here uses the diagonal form or the basis constructors: sets are
enumerated straight from the definitions and compared to what the
structure module predicts.  Sizes are bounded by ``cap`` (default
``3^8``); exceeding it raises :class:`TooLarge`.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

from .algebra import (
    AlgebraElement,
    batch_inv,
    batch_involution,
    batch_mul,
    batch_one,
    batch_pow,
    batch_supported_on_power_subgroup,
    batch_unit_order,
)
from .errors import NotAGroup, TooLarge

DEFAULT_CAP = 3**8
DEFAULT_INDEPENDENCE_CAP = 3**10

ALL, SYMMETRIC, UNITARY = "all", "symmetric", "unitary"


def _keys(X):
    X = np.ascontiguousarray(X, dtype=np.int64)
    return {row.tobytes() for row in X}


def _unique(X):
    return np.unique(np.asarray(X, dtype=np.int64), axis=0)


@dataclass(frozen=True, eq=False)
class UnitSet:
    """A finite set of normalized units of ``F_p[G]``, one row per element."""

    group: object
    rows: np.ndarray
    keys: frozenset = field(repr=False)

    @classmethod
    def from_rows(cls, group, rows):
        rows = _unique(rows).reshape(-1, group.size)
        rows.setflags(write=False)
        return cls(group, rows, frozenset(_keys(rows)))

    def __len__(self):
        return self.rows.shape[0]

    def __contains__(self, x):
        if isinstance(x, AlgebraElement):
            x = x.coeffs
        return np.asarray(x, dtype=np.int64).tobytes() in self.keys

    def __eq__(self, other):
        if not isinstance(other, UnitSet):
            return NotImplemented
        return self.group == other.group and self.keys == other.keys

    __hash__ = None

    def elements(self):
        return [AlgebraElement(self.group, r) for r in self.rows]

    def log_size(self):
        n, k = len(self), 0
        while n > 1 and n % self.group.p == 0:
            n //= self.group.p
            k += 1
        return k if n == 1 else None


def all_normalized(group, cap=DEFAULT_CAP):
    n, p = group.size, group.p
    count = p ** (n - 1)
    if count > cap:
        raise TooLarge(f"|V| = {p}^{n - 1} exceeds the enumeration cap {cap}")
    idx = np.arange(count, dtype=np.int64)
    free = (idx[:, None] // (p ** np.arange(n - 1, dtype=np.int64))[None, :]) % p
    head = (1 - free.sum(axis=1)) % p
    return np.concatenate([head[:, None], free], axis=1)


@lru_cache(maxsize=32)
def enumerate_units(kind, eta, cap=DEFAULT_CAP):
    """``V(F_p G)``, its symmetric units, or its unitary units, by exhaustion."""
    G = eta.group
    V = all_normalized(G, cap)
    if kind == ALL:
        keep = V
    elif kind == SYMMETRIC:
        keep = V[(batch_involution(V, eta.index_map) == V).all(axis=1)]
    elif kind == UNITARY:
        prod = batch_mul(G, V, batch_involution(V, eta.index_map))
        keep = V[(prod == batch_one(G, 1)).all(axis=1)]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return UnitSet.from_rows(G, keep)


def _extend(group, H, Hkeys, g, cap):
    """``H * <g>`` for a subgroup ``H`` (rows) of an abelian group."""
    layers = [H]
    pw = np.asarray(g, dtype=np.int64)[None, :]
    while pw[0].tobytes() not in Hkeys:
        if H.shape[0] * (len(layers) + 1) > cap:
            raise TooLarge(f"generated subgroup exceeds cap {cap}")
        layers.append(batch_mul(group, H, np.repeat(pw, H.shape[0], axis=0)))
        pw = batch_mul(group, pw, np.asarray(g, dtype=np.int64)[None, :])
    H = np.concatenate(layers)
    return H, _keys(H)


def closure(generators, group, cap=DEFAULT_CAP):
    """Subgroup generated by normalized units ``generators``."""
    H = batch_one(group, 1)
    Hkeys = _keys(H)
    for g in generators:
        g = g.coeffs if isinstance(g, AlgebraElement) else np.asarray(g)
        if int(g.sum() % group.p) != 1:
            raise ValueError("closure generators must be normalized")
        H, Hkeys = _extend(group, H, Hkeys, g, cap)
    return UnitSet.from_rows(group, H)


def _check_group(T):
    if batch_one(T.group, 1)[0].tobytes() not in T.keys:
        raise NotAGroup("set does not contain 1")
    G = T.group
    H = batch_one(G, 1)
    Hkeys = _keys(H)
    for row in T.rows:
        if len(Hkeys) == len(T):
            break
        if row.tobytes() in Hkeys:
            continue
        try:
            H, Hkeys = _extend(G, H, Hkeys, row, cap=len(T))
        except TooLarge:
            raise NotAGroup("set is not closed under multiplication") from None
        if not Hkeys <= T.keys:
            raise NotAGroup("set is not closed under multiplication")
    if Hkeys != T.keys:
        raise NotAGroup("set is not closed under multiplication")


def abelian_invariants(T):
    """``(f_1, f_2, ...)``: number of cyclic factors of order ``p^i``.

    Read off the sizes of the power images ``T^(p^j)``; trailing zeros trimmed.
    """
    _check_group(T)
    G = T.group
    p = G.p
    logs = [T.log_size()]
    if logs[0] is None:
        raise NotAGroup(f"|T| = {len(T)} is not a power of {p}")
    P = T.rows
    while P.shape[0] > 1:
        P = _unique(batch_pow(G, P, p))
        logs.append(UnitSet.from_rows(G, P).log_size())
    logs.append(0)
    ranks = [logs[j] - logs[j + 1] for j in range(len(logs) - 1)]
    ranks.append(0)
    f = [ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1)]
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False

    @property
    def status(self):
        if self.skipped:
            return "SKIPPED"
        return "PASS" if self.passed else "FAIL"

    def line(self):
        return f"{self.status:7}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _rows(claimed):
    return [x.coeffs if isinstance(x, AlgebraElement) else np.asarray(x) for x in claimed]


def order_product(claimed, group):
    rows = _rows(claimed)
    if not rows:
        return 1
    return math.prod(int(o) for o in batch_unit_order(group, np.stack(rows)))


def verify_basis(claimed, target, name="basis"):
    """Basis iff the claimed units generate ``target`` and their orders multiply to ``|target|``."""
    G = target.group
    gen = closure(claimed, G, cap=max(len(target), 1))
    prod = order_product(claimed, G)
    ok_gen = gen == target
    ok_ord = prod == len(target)
    return CheckResult(
        name,
        ok_gen and ok_ord,
        f"|<basis>| = {len(gen)}, prod orders = {prod}, |target| = {len(target)}",
    )


def verify_eq1(eta, cap=DEFAULT_CAP):
    """``V = S x U`` as an internal direct product."""
    G = eta.group
    V = enumerate_units(ALL, eta, cap)
    S = enumerate_units(SYMMETRIC, eta, cap)
    U = enumerate_units(UNITARY, eta, cap)
    meet = S.keys & U.keys
    trivial_meet = meet == _keys(batch_one(G, 1))
    sizes = len(S) * len(U) == len(V)
    prods = batch_mul(
        G, np.repeat(S.rows, len(U), axis=0), np.tile(U.rows, (len(S), 1))
    )
    covers = _keys(prods) == V.keys
    return CheckResult(
        "eq1: V = S x V_*",
        trivial_meet and sizes and covers,
        f"|S| = {len(S)}, |V_*| = {len(U)}, |V| = {len(V)}, |S n V_*| = {len(meet)}",
    )


def verify_eq2(eta, cap=DEFAULT_CAP):
    """Images of ``x -> x^* x^-1`` and ``x -> x^* x`` are exactly U and S."""
    G = eta.group
    V = enumerate_units(ALL, eta, cap).rows
    star = batch_involution(V, eta.index_map)
    img1 = _keys(batch_mul(G, star, batch_inv(G, V)))
    img2 = _keys(batch_mul(G, star, V))
    U = enumerate_units(UNITARY, eta, cap)
    S = enumerate_units(SYMMETRIC, eta, cap)
    return CheckResult(
        "eq2: psi1(V) = V_*, psi2(V) = S",
        img1 == U.keys and img2 == S.keys,
        f"|psi1(V)| = {len(img1)}, |psi2(V)| = {len(img2)}",
    )


def verify_eq3(eta, i, cap=DEFAULT_CAP):
    """``S^(p^i) = S(F G^(p^i))`` and likewise for U."""
    G = eta.group
    ok, parts = True, []
    for kind, label in ((SYMMETRIC, "S"), (UNITARY, "V_*")):
        T = enumerate_units(kind, eta, cap)
        lhs = _keys(batch_pow(G, T.rows, G.p**i))
        rhs = _keys(T.rows[batch_supported_on_power_subgroup(G, T.rows, i)])
        ok &= lhs == rhs
        parts.append(f"|{label}^p^{i}| = {len(lhs)} vs {len(rhs)}")
    return CheckResult(f"eq3: power subgroups, i = {i}", ok, ", ".join(parts))


def _all_products(group, rows, cap):
    p = group.p
    r = len(rows)
    if p**r > cap:
        raise TooLarge(f"{p}^{r} combinations exceed cap {cap}")
    P = batch_one(group, 1)
    for b in rows:
        pw = np.stack([batch_pow(group, b[None, :], c)[0] for c in range(p)])
        P = np.concatenate(
            [batch_mul(group, P, np.repeat(pw[c : c + 1], P.shape[0], axis=0)) for c in range(p)]
        )
    return P


def independence_mod_p(claimed, group, cap=DEFAULT_INDEPENDENCE_CAP, name="independence mod V^p"):
    """Independence test that avoids enumerating the target group.

    Every nontrivial combination ``prod b_j^c_j`` with ``0 <= c_j < p`` must
    fall outside ``V^p = V(F G^p)``.  The combinations of the order-``p``
    powers ``b_j^(|b_j|/p)`` must also all be nontrivial, which makes the
    subgroup generated by the ``b_j`` their direct product.
    """
    rows = _rows(claimed)
    if not rows:
        return CheckResult(name, True, "empty list")
    P = _all_products(group, rows, cap)[1:]
    frattini = not batch_supported_on_power_subgroup(group, P, 1).any()
    orders = batch_unit_order(group, np.stack(rows))
    socle = [batch_pow(group, b[None, :], int(o) // group.p)[0] for b, o in zip(rows, orders)]
    Q = _all_products(group, socle, cap)[1:]
    one = batch_one(group, 1)[0]
    direct = not (Q == one).all(axis=1).any()
    prod = math.prod(int(o) for o in orders)
    return CheckResult(
        name,
        frattini and direct,
        f"r = {len(rows)}, mod V^p: {'ok' if frattini else 'dependent'}, "
        f"socle: {'ok' if direct else 'dependent'}, prod orders = {prod}",
    )
