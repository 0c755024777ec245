"""Exact arithmetic in the group algebra F_p[G].

Elements are dense coefficient vectors indexed like ``GroupSpec.digits``.
Every function here returns new values; nothing is mutated in place.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import AugmentationZero, ConsistencyFailure, GroupMismatch, NotNormalized
from .group import GroupSpec, p_valuation


def _frozen(arr):
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """``sum_g alpha_g g`` stored as canonical residues ``0 .. p-1``."""

    group: GroupSpec
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64)
        if c.shape != (self.group.size,):
            raise GroupMismatch(f"expected {self.group.size} coefficients, got shape {c.shape}")
        object.__setattr__(self, "coeffs", _frozen(c % self.group.p))

    @classmethod
    def zero(cls, group):
        return cls(group, np.zeros(group.size, dtype=np.int64))

    @classmethod
    def one(cls, group):
        return cls.basis(group, group.identity)

    @classmethod
    def basis(cls, group, g, coeff=1):
        c = np.zeros(group.size, dtype=np.int64)
        c[group.index(g)] = coeff
        return cls(group, c)

    @classmethod
    def from_dict(cls, group, terms):
        """Build from ``{exponent tuple: coefficient}``; repeated keys add up."""
        c = np.zeros(group.size, dtype=np.int64)
        for g, a in terms.items():
            c[group.index(g)] += a
        return cls(group, c)

    @property
    def p(self):
        return self.group.p

    def key(self):
        return self.coeffs.tobytes()

    def terms(self):
        """Sparse form: list of ``(exponent tuple, coefficient)`` in index order."""
        return [(self.group.element(i), int(self.coeffs[i])) for i in np.flatnonzero(self.coeffs)]

    def augmentation(self):
        return augmentation(self)

    def is_one(self):
        return self.coeffs[0] == 1 and not self.coeffs[1:].any()

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")
        return other

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.group, self.key()))

    def __add__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.one(self.group) * other
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AlgebraElement(self.group, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.group, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(self.group, self.coeffs * int(other))
        if self._check(other) is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        return power(self, k)

    def __repr__(self):
        return f"AlgebraElement({self.group}, {format_element(self)})"


def format_element(x):
    """Human-readable form, e.g. ``2 + a1 + a1^2``."""
    parts = []
    for g, c in x.terms():
        mono = "*".join(
            f"a{j + 1}" if e == 1 else f"a{j + 1}^{e}" for j, e in enumerate(g) if e
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


def augmentation(x):
    """Sum of coefficients mod p."""
    return int(x.coeffs.sum() % x.p)


def mul(x, y):
    if x.group != y.group:
        raise GroupMismatch(f"{x.group} vs {y.group}")
    return AlgebraElement(x.group, batch_mul(x.group, x.coeffs[None, :], y.coeffs[None, :])[0])


def power(x, k):
    """``x**k``; negative ``k`` requires ``x`` to be a unit."""
    if k < 0:
        return power(inv_unit(x), -k)
    return AlgebraElement(x.group, batch_pow(x.group, x.coeffs[None, :], k)[0])


def inv_unit(x):
    """Inverse of a unit via the truncated geometric series.

    Writing ``x = c(1 - n)`` with ``c`` the augmentation, ``n`` lies in the
    augmentation ideal, so ``n^(s+1) = 0`` and ``x^-1 = c^-1 sum_{k<=s} n^k``.
    """
    if augmentation(x) == 0:
        raise AugmentationZero("element has augmentation 0 and is not a unit")
    return AlgebraElement(x.group, batch_inv(x.group, x.coeffs[None, :])[0])


def unit_order(x):
    """Least ``p^m`` with ``x^(p^m) = 1`` for a normalized unit ``x``."""
    if augmentation(x) != 1:
        raise NotNormalized(f"augmentation is {augmentation(x)}, not 1")
    return int(batch_unit_order(x.group, x.coeffs[None, :])[0])


def apply_involution(x, eta):
    """``x^* = sum_g alpha_g eta(g)``."""
    if eta.group != x.group:
        raise GroupMismatch(f"{x.group} vs {eta.group}")
    return AlgebraElement(x.group, batch_involution(x.coeffs[None, :], eta.index_map)[0])


def supported_on_power_subgroup(x, i):
    """True iff ``x`` lies in ``F[G^(p^i)]``."""
    return bool(batch_supported_on_power_subgroup(x.group, x.coeffs[None, :], i)[0])


# Batch forms.  Rows of a 2-D int64 array are elements of F_p[G].


def batch_mul(group, X, Y):
    return kernels.convolve_batch(
        X, Y, group.digits, group.orders_array, group.strides, group.p
    )


def batch_one(group, n):
    out = np.zeros((n, group.size), dtype=np.int64)
    out[:, 0] = 1
    return out


def batch_pow(group, X, k):
    if k < 0:
        raise ValueError("batch_pow takes k >= 0; invert first")
    result = batch_one(group, X.shape[0])
    base = np.asarray(X, dtype=np.int64)
    while k:
        if k & 1:
            result = batch_mul(group, result, base)
        k >>= 1
        if k:
            base = batch_mul(group, base, base)
    return result


def batch_augmentation(group, X):
    return np.asarray(X).sum(axis=1) % group.p


def batch_inv(group, X):
    X = np.asarray(X, dtype=np.int64)
    p = group.p
    c = batch_augmentation(group, X)
    if (c == 0).any():
        raise AugmentationZero("batch contains an element of augmentation 0")
    c_inv = np.array([pow(int(v), -1, p) for v in c], dtype=np.int64)[:, None]
    one = batch_one(group, X.shape[0])
    nil = (one - c_inv * X) % p
    acc = one
    for _ in range(group.nilpotency_bound):
        acc = (one + batch_mul(group, nil, acc)) % p
    return (c_inv * acc) % p


def batch_unit_order(group, X):
    X = np.asarray(X, dtype=np.int64)
    if (batch_augmentation(group, X) != 1).any():
        raise NotNormalized("batch contains a non-normalized element")
    p = group.p
    orders = np.ones(X.shape[0], dtype=object)
    cur = X
    pending = ~_rows_are_one(cur)
    steps = p_valuation(group.exponent, p)
    for _ in range(steps):
        if not pending.any():
            break
        orders[pending] *= p
        cur = batch_pow(group, cur, p)
        pending &= ~_rows_are_one(cur)
    if pending.any():
        raise ConsistencyFailure("unit order exceeds the exponent of G")
    return orders


def batch_involution(X, index_map):
    X = np.asarray(X, dtype=np.int64)
    out = np.empty_like(X)
    out[:, index_map] = X
    return out


def batch_supported_on_power_subgroup(group, X, i):
    mods = np.array([min(group.p**i, q) for q in group.orders], dtype=np.int64)
    outside = (group.digits % mods).any(axis=1) if group.t else np.zeros(1, dtype=bool)
    return ~(np.asarray(X)[:, outside] != 0).any(axis=1)


def _rows_are_one(X):
    return (X[:, 0] == 1) & ~X[:, 1:].any(axis=1)
