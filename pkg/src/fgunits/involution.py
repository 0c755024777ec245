"""Involutory automorphisms of G and their diagonal normal form.

An involution ``eta`` is given by the images of the generators.  Since
``|G|`` is odd, every element splits uniquely as ``g = g_plus * g_minus``
with ``eta`` fixing ``g_plus`` and inverting ``g_minus``; ``diagonalize``
uses this to rewrite ``G`` as ``<b_1> x ... x <b_t>`` with
``eta(b_i) = b_i^-1`` for ``i <= l`` and ``eta(b_i) = b_i`` otherwise.
"""

from dataclasses import dataclass
from functools import cached_property
import math

import numpy as np

from .errors import ConsistencyFailure, GroupMismatch, NotInvolutory, NotWellDefined
from .group import GroupSpec, group_inv, group_mul, group_pow
from .lattice import cyclic_decomposition


@dataclass(frozen=True)
class InvolutionSpec:
    """Endomorphism of ``group`` with ``images[i] = eta(a_i)``.

    Construction only normalizes the data; call :func:`validate_involution`
    (the named constructors do) before relying on it being an involution.
    """

    group: GroupSpec
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.group.t:
            raise GroupMismatch(f"need {self.group.t} generator images, got {len(self.images)}")
        object.__setattr__(self, "images", tuple(self.group.reduce(g) for g in self.images))

    @classmethod
    def canonical(cls, group):
        return _checked(cls(group, [group_inv(group, group.generator(i)) for i in range(group.t)]))

    @classmethod
    def identity(cls, group):
        return _checked(cls(group, [group.generator(i) for i in range(group.t)]))

    @classmethod
    def swap(cls, group, i, j):
        """Exchange generators ``i`` and ``j`` (0-based); other generators fixed."""
        if group.orders[i] != group.orders[j]:
            raise NotWellDefined(f"cannot swap generators of orders {group.orders[i]} and {group.orders[j]}")
        images = [group.generator(k) for k in range(group.t)]
        images[i], images[j] = images[j], images[i]
        return _checked(cls(group, images))

    @classmethod
    def from_images(cls, group, images):
        return _checked(cls(group, images))

    @cached_property
    def matrix(self):
        return np.array(self.images, dtype=np.int64).reshape(self.group.t, self.group.t)

    @cached_property
    def index_map(self):
        """``index_map[i]`` is the index of ``eta(g_i)``."""
        G = self.group
        if G.t == 0:
            return np.zeros(1, dtype=np.int64)
        img = (G.digits @ self.matrix) % G.orders_array
        return img @ G.strides

    def __call__(self, g):
        G = self.group
        g = G.reduce(g)
        out = G.identity
        for c, image in zip(g, self.images):
            out = group_mul(G, out, group_pow(G, image, c))
        return out

    def fixed_point_count(self):
        """Brute-force ``|G_eta|``."""
        return int((self.index_map == np.arange(self.group.size)).sum())


def _checked(eta):
    validate_involution(eta)
    return eta


def validate_involution(eta):
    """Raise unless ``eta`` is a well-defined endomorphism with ``eta^2 = id``."""
    G = eta.group
    for i, (q, image) in enumerate(zip(G.orders, eta.images)):
        if any(q * c % m for c, m in zip(image, G.orders)):
            raise NotWellDefined(f"image of a{i + 1} has order not dividing {q}")
    for i in range(G.t):
        a = G.generator(i)
        if eta(eta(a)) != a:
            raise NotInvolutory(f"eta(eta(a{i + 1})) = {eta(eta(a))} != {a}")


def sqrt_in_G(group, g):
    """The unique square root of ``g`` in the odd-order group."""
    return group_pow(group, g, (group.exponent + 1) // 2)


def eigensplit(g, eta):
    """``(plus, minus)`` with ``eta(plus) = plus``, ``eta(minus) = minus^-1``, product ``g``."""
    G = eta.group
    eg = eta(g)
    plus = sqrt_in_G(G, group_mul(G, g, eg))
    minus = sqrt_in_G(G, group_mul(G, g, group_inv(G, eg)))
    return plus, minus


@dataclass(frozen=True)
class DiagonalForm:
    """``G = <b_1> x ... x <b_t>`` with ``b_1..b_l`` inverted and the rest fixed.

    ``generators[i]`` is ``b_i`` as an exponent tuple in the original
    coordinates (forward map); ``backward[j]`` is the original generator
    ``a_j`` written in the new coordinates.
    """

    eta: InvolutionSpec
    group: GroupSpec
    l: int
    generators: tuple
    backward: tuple

    @property
    def original(self):
        return self.eta.group

    @property
    def t(self):
        return self.group.t

    def to_old(self, z):
        G = self.original
        z = self.group.reduce(z)
        out = G.identity
        for c, b in zip(z, self.generators):
            out = group_mul(G, out, group_pow(G, b, c))
        return out

    def to_new(self, c):
        H = self.group
        c = self.original.reduce(c)
        out = H.identity
        for e, row in zip(c, self.backward):
            out = group_mul(H, out, group_pow(H, row, e))
        return out

    def fixed_subgroup_orders(self, i):
        return fixed_subgroup_orders(self, i)


def diagonalize(eta):
    validate_involution(eta)
    G = eta.group
    splits = [eigensplit(G.generator(i), eta) for i in range(G.t)]
    minus = cyclic_decomposition([m for _, m in splits], G.orders)
    plus = cyclic_decomposition([f for f, _ in splits], G.orders)

    generators = minus.generators + plus.generators
    orders = minus.orders + plus.orders
    backward = tuple(
        minus.coordinates(m) + plus.coordinates(f) for f, m in splits
    )
    new_group = GroupSpec(G.p, orders, max_size=G.max_size)
    d = DiagonalForm(
        eta=eta,
        group=new_group,
        l=len(minus.orders),
        generators=generators,
        backward=backward,
    )
    check_diagonal_form(d)
    return d


def check_diagonal_form(d):
    """Raise ``ConsistencyFailure`` if any DiagonalForm invariant fails."""
    G, H, eta = d.original, d.group, d.eta
    if math.prod(H.orders) != G.size:
        raise ConsistencyFailure(f"new orders {H.orders} do not multiply to |G| = {G.size}")
    if not 0 <= d.l <= H.t:
        raise ConsistencyFailure(f"l = {d.l} out of range")
    for i, (b, q) in enumerate(zip(d.generators, H.orders)):
        want = group_inv(G, b) if i < d.l else b
        if eta(b) != want:
            raise ConsistencyFailure(f"eta does not act diagonally on b{i + 1} = {b}")
        if G.element_order(b) != q:
            raise ConsistencyFailure(f"b{i + 1} has order {G.element_order(b)}, expected {q}")
    for j in range(G.t):
        a = G.generator(j)
        if d.to_old(d.to_new(a)) != a:
            raise ConsistencyFailure(f"change of basis does not round-trip on a{j + 1}")
    for i in range(H.t):
        e = H.generator(i)
        if d.to_new(d.to_old(e)) != e:
            raise ConsistencyFailure(f"change of basis does not round-trip on b{i + 1}")


def fixed_subgroup_orders(d, i):
    """``(|G_eta^(p^i)|, |G^(p^i)|)`` read off the diagonal form."""
    H = d.group
    shrink = H.p**i
    fixed = math.prod(max(q // shrink, 1) for q in H.orders[d.l :])
    full = math.prod(max(q // shrink, 1) for q in H.orders)
    return fixed, full
