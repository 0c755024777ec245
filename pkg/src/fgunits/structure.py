"""Bases and invariants of the symmetric and unitary unit groups.

Everything is indexed in the diagonal coordinates of a :class:`DiagonalForm`:
``alpha`` runs over exponent tuples for the new generators ``b_i``, while
the constructed units themselves live in ``F_p[G]`` for the original ``G``
and are acted on by the original involution.
"""

from dataclasses import dataclass, field
import numpy as np

from .algebra import (
    AlgebraElement,
    apply_involution,
    augmentation,
    batch_unit_order,
    inv_unit,
    mul,
    power,
)
from .errors import ConsistencyFailure, NotNormalized
from .involution import fixed_subgroup_orders

L0, L1, L2 = "L0", "L1", "L2"


@dataclass(frozen=True)
class IndexClass:
    alpha: tuple
    weight: int
    head: int
    cls: str

    @classmethod
    def classify(cls, alpha, l):
        head = sum(alpha[:l])
        if head == 0:
            tag = L0
        elif head % 2:
            tag = L1
        else:
            tag = L2
        return cls(tuple(alpha), sum(alpha), head, tag)


def in_L(alpha, p):
    return any(a % p for a in alpha)


def enumerate_L(d):
    """All of ``L`` in mixed-radix order of ``alpha``, each tagged L0/L1/L2."""
    H = d.group
    return [
        IndexClass.classify(alpha, d.l)
        for alpha in H.elements()
        if in_L(alpha, H.p)
    ]


def build_u_alpha(alpha, d):
    """``1 + prod_i (b_i - 1)^alpha_i`` in ``F_p[G]``."""
    a = alpha.alpha if isinstance(alpha, IndexClass) else tuple(alpha)
    H, G = d.group, d.original
    if len(a) != H.t or not in_L(a, H.p):
        raise ValueError(f"alpha = {a} is not in L")
    one = AlgebraElement.one(G)
    z = one
    for b, e in zip(d.generators, a):
        if e:
            z = mul(z, power(AlgebraElement.basis(G, b) - one, e))
    return one + z


def psi1(x, eta):
    """``x^* x^-1``; always unitary."""
    _require_normalized(x)
    return mul(apply_involution(x, eta), inv_unit(x))


def psi2(x, eta):
    """``x^* x``; always symmetric."""
    _require_normalized(x)
    return mul(apply_involution(x, eta), x)


def _require_normalized(x):
    if augmentation(x) != 1:
        raise NotNormalized(f"augmentation is {augmentation(x)}, not 1")


def unitary_basis(d):
    return [(a, psi1(build_u_alpha(a, d), d.eta)) for a in enumerate_L(d) if a.cls == L1]


def symmetric_basis(d):
    out = []
    for a in enumerate_L(d):
        if a.cls == L2:
            out.append((a, psi2(build_u_alpha(a, d), d.eta)))
        elif a.cls == L0:
            out.append((a, build_u_alpha(a, d)))
    return out


def _power_sizes(d, i):
    """``|G^(p^(i-1))|, |G^(p^i)|, |G^(p^(i+1))|`` and the same for ``G_eta``."""
    fixed, full = zip(*(fixed_subgroup_orders(d, j) for j in (i - 1, i, i + 1)))
    return full, fixed


def _half(n):
    if n % 2 or n < 0:
        raise ConsistencyFailure(f"invariant count {n}/2 is not a natural number")
    return n // 2


def invariants_symmetric(d, i):
    """Number of cyclic factors of order ``p^i`` in ``S``."""
    if i < 1:
        raise ValueError("i must be >= 1")
    (g0, g1, g2), (h0, h1, h2) = _power_sizes(d, i)
    return _half(g0 - 2 * g1 + g2 + h0 - 2 * h1 + h2)


def invariants_unitary(d, i):
    """Number of cyclic factors of order ``p^i`` in the unitary subgroup."""
    if i < 1:
        raise ValueError("i must be >= 1")
    (g0, g1, g2), (h0, h1, h2) = _power_sizes(d, i)
    return _half(g0 - 2 * g1 + g2 - h0 + 2 * h1 - h2)


def predicted_unit_order(alpha, d):
    """Least ``p^m`` with ``p^m * alpha_j >= q_j`` for some ``j`` where ``alpha_j > 0``."""
    a = alpha.alpha if isinstance(alpha, IndexClass) else tuple(alpha)
    H = d.group
    if not in_L(a, H.p):
        raise ValueError(f"alpha = {a} is not in L")
    order = 1
    while not any(e and order * e >= q for e, q in zip(a, H.orders)):
        order *= H.p
    return order


def max_level(d):
    """Largest ``i`` for which ``f_i`` can be nonzero: ``log_p`` of the exponent."""
    e, k = d.group.exponent, 0
    while e > 1:
        e //= d.group.p
        k += 1
    return k


def _trim(v):
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


@dataclass(frozen=True)
class BasisEntry:
    index: IndexClass
    element: AlgebraElement
    order: int


@dataclass(frozen=True)
class StructureReport:
    """Orders are stored as base-``p`` logarithms; ``|V| = p^log_order_V``."""

    p: int
    size_G: int
    l: int
    fixed_size: int
    log_order_V: int
    log_order_S: int
    log_order_U: int
    f_symmetric: tuple
    f_unitary: tuple
    rank_symmetric: int
    rank_unitary: int
    symmetric: tuple = field(repr=False)
    unitary: tuple = field(repr=False)

    def check(self):
        """List of violated report invariants (empty when consistent)."""
        bad = []
        if self.log_order_S + self.log_order_U != self.log_order_V:
            bad.append("|S|*|U| != |V|")
        if sum(self.f_symmetric) != self.rank_symmetric:
            bad.append("sum f(S) != p-rank(S)")
        if sum(self.f_unitary) != self.rank_unitary:
            bad.append("sum f(U) != p-rank(U)")
        for name, f, log in (
            ("S", self.f_symmetric, self.log_order_S),
            ("U", self.f_unitary, self.log_order_U),
        ):
            if sum(i * n for i, n in enumerate(f, 1)) != log:
                bad.append(f"prod p^(i f_i) != |{name}|")
        for name, f, entries in (
            ("S", self.f_symmetric, self.symmetric),
            ("U", self.f_unitary, self.unitary),
        ):
            if sorted(e.order for e in entries) != expected_order_multiset(self.p, f):
                bad.append(f"basis orders of {name} do not match f")
        return bad


def expected_order_multiset(p, f):
    return sorted(p**i for i, n in enumerate(f, 1) for _ in range(n))


def _entries(pairs, group):
    if not pairs:
        return ()
    X = np.stack([x.coeffs for _, x in pairs])
    orders = batch_unit_order(group, X)
    return tuple(BasisEntry(a, x, int(o)) for (a, x), o in zip(pairs, orders))


def structure_report(d):
    G = d.original
    p = G.p
    fixed, full = fixed_subgroup_orders(d, 0)
    fixed_p, full_p = fixed_subgroup_orders(d, 1)
    top = max_level(d) + 1
    f_s = _trim(invariants_symmetric(d, i) for i in range(1, top + 1))
    f_u = _trim(invariants_unitary(d, i) for i in range(1, top + 1))
    report = StructureReport(
        p=p,
        size_G=full,
        l=d.l,
        fixed_size=fixed,
        log_order_V=full - 1,
        log_order_S=(full + fixed - 2) // 2,
        log_order_U=(full - fixed) // 2,
        f_symmetric=f_s,
        f_unitary=f_u,
        rank_symmetric=(full - full_p + fixed - fixed_p) // 2,
        rank_unitary=(full - full_p - fixed + fixed_p) // 2,
        symmetric=_entries(symmetric_basis(d), G),
        unitary=_entries(unitary_basis(d), G),
    )
    return report
