"""Finite abelian p-groups given by cyclic generator orders.

An element of ``G = C_{q_1} x ... x C_{q_t}`` is an exponent tuple
``(c_1, ..., c_t)`` with ``0 <= c_i < q_i``.  Tuples are identified with
``0 .. |G|-1`` by mixed radix, ``c_1`` varying fastest.
"""

from dataclasses import dataclass, field
from functools import cached_property
import math

import numpy as np

from .errors import GroupMismatch, InvalidGroup, TooLarge

DEFAULT_MAX_GROUP = 3**8


def is_prime(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def p_valuation(n, p):
    """Exponent ``k`` with ``n == p**k``; raises if ``n`` is not a power of ``p``."""
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise InvalidGroup(f"{n * p**k} is not a power of {p}")
    return k


@dataclass(frozen=True)
class GroupSpec:
    """``C_{q_1} x ... x C_{q_t}`` with every ``q_i`` a power of the odd prime ``p``."""

    p: int
    orders: tuple
    max_size: int = field(default=DEFAULT_MAX_GROUP, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(q) for q in self.orders))
        if not is_prime(self.p) or self.p == 2:
            raise InvalidGroup(f"p must be an odd prime, got {self.p}")
        for q in self.orders:
            if q < 1:
                raise InvalidGroup(f"generator order must be >= 1, got {q}")
            p_valuation(q, self.p)
        if self.size > self.max_size:
            raise TooLarge(f"|G| = {self.size} exceeds the size guard {self.max_size}")

    @property
    def t(self):
        return len(self.orders)

    @property
    def size(self):
        return math.prod(self.orders)

    @property
    def exponent(self):
        return max(self.orders, default=1)

    @property
    def nilpotency_bound(self):
        """``s = sum(q_i - 1)``; the augmentation ideal satisfies ``I^(s+1) = 0``."""
        return sum(q - 1 for q in self.orders)

    @cached_property
    def orders_array(self):
        return np.array(self.orders, dtype=np.int64)

    @cached_property
    def strides(self):
        s = np.ones(self.t, dtype=np.int64)
        for i in range(1, self.t):
            s[i] = s[i - 1] * self.orders[i - 1]
        return s

    @cached_property
    def digits(self):
        """``(|G|, t)`` table: row ``i`` is the exponent tuple with index ``i``."""
        idx = np.arange(self.size, dtype=np.int64)
        if self.t == 0:
            return np.zeros((1, 0), dtype=np.int64)
        return (idx[:, None] // self.strides[None, :]) % self.orders_array[None, :]

    def index(self, g):
        g = self.reduce(g)
        return int(sum(c * int(s) for c, s in zip(g, self.strides)))

    def element(self, i):
        return tuple(int(c) for c in self.digits[i])

    def elements(self):
        return [self.element(i) for i in range(self.size)]

    def reduce(self, g):
        g = tuple(int(c) for c in g)
        if len(g) != self.t:
            raise GroupMismatch(f"tuple of length {len(g)} in a group with {self.t} generators")
        return tuple(c % q for c, q in zip(g, self.orders))

    @property
    def identity(self):
        return (0,) * self.t

    def generator(self, i):
        g = [0] * self.t
        g[i] = 1
        return self.reduce(g)

    def power_subgroup_order(self, i):
        """``|G^(p^i)|``."""
        return math.prod(max(q // self.p**i, 1) for q in self.orders)

    def element_order(self, g):
        g = self.reduce(g)
        return math.lcm(1, *(q // math.gcd(c, q) for c, q in zip(g, self.orders)))

    def __str__(self):
        if not self.orders:
            return "1"
        return " x ".join(f"C{q}" for q in self.orders)


def group_mul(group, a, b):
    """Product of two exponent tuples in ``group``."""
    a, b = group.reduce(a), group.reduce(b)
    return tuple((x + y) % q for x, y, q in zip(a, b, group.orders))


def group_pow(group, a, k):
    return group.reduce(c * k for c in a)


def group_inv(group, a):
    return group_pow(group, a, -1)
