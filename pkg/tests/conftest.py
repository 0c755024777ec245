import random

import numpy as np
import pytest

from fgunits import AlgebraElement, GroupSpec, InvolutionSpec


def make(p, orders, kind="canonical"):
    G = GroupSpec(p, orders)
    if kind == "canonical":
        return G, InvolutionSpec.canonical(G)
    if kind == "identity":
        return G, InvolutionSpec.identity(G)
    if kind == "swap":
        return G, InvolutionSpec.swap(G, 0, 1)
    raise ValueError(kind)


# (p, orders, involution) configurations named in the acceptance criteria
DESK_CONFIGS = [
    (3, (3,), "canonical"),
    (3, (3,), "identity"),
    (3, (3, 3), "canonical"),
    (3, (3, 3), "identity"),
    (3, (3, 3), "swap"),
    (3, (9,), "canonical"),
    (3, (9,), "identity"),
    (5, (5,), "canonical"),
    (5, (5,), "identity"),
]


def config_id(cfg):
    p, orders, kind = cfg
    return f"p{p}-{'x'.join(map(str, orders))}-{kind}"


def naive_mul(x, y):
    """Double loop over group elements, dictionary-based."""
    G = x.group
    acc = {}
    for g, a in x.terms():
        for h, b in y.terms():
            k = tuple((u + v) % q for u, v, q in zip(g, h, G.orders))
            acc[k] = (acc.get(k, 0) + a * b) % G.p
    return AlgebraElement.from_dict(G, acc)


def random_element(G, rng, normalized=False):
    c = np.array([rng.randrange(G.p) for _ in range(G.size)], dtype=np.int64)
    if normalized:
        c[0] = (c[0] + 1 - c.sum()) % G.p
    return AlgebraElement(G, c)


def _hom_matmul(A, B, orders):
    t = len(orders)
    return [
        [sum(A[i][k] * B[k][j] for k in range(t)) % orders[j] for j in range(t)]
        for i in range(t)
    ]


def random_automorphism(orders, p, rng, steps=12):
    """Matrices ``(M, M_inv)`` of a random automorphism built from elementary moves."""
    t = len(orders)
    ident = [[int(i == j) for j in range(t)] for i in range(t)]
    M = [r[:] for r in ident]
    Minv = [r[:] for r in ident]
    for _ in range(steps):
        move = rng.choice(("transvection", "scale", "swap"))
        E = [r[:] for r in ident]
        Einv = [r[:] for r in ident]
        if move == "transvection" and t > 1:
            i, j = rng.sample(range(t), 2)
            step = orders[j] // np.gcd(orders[i], orders[j])
            c = int(step) * rng.randrange(1, orders[j] + 1)
            E[i][j] = c % orders[j]
            Einv[i][j] = (-c) % orders[j]
        elif move == "scale":
            i = rng.randrange(t)
            u = rng.choice([u for u in range(1, orders[i] + 1) if u % p]) if orders[i] > 1 else 1
            E[i][i] = u % orders[i] if orders[i] > 1 else 0
            Einv[i][i] = pow(u, -1, orders[i]) if orders[i] > 1 else 0
        elif move == "swap" and t > 1:
            i, j = rng.sample(range(t), 2)
            if orders[i] != orders[j]:
                continue
            E[i], E[j] = E[j], E[i]
            Einv = [r[:] for r in E]
        else:
            continue
        M = _hom_matmul(M, E, orders)
        Minv = _hom_matmul(Einv, Minv, orders)
    return M, Minv


def random_involution(rng, max_size=81):
    """A random valid involution on a random group with ``|G| <= max_size``, p = 3."""
    p = 3
    candidates = [
        (3,), (9,), (27,), (81,), (3, 3), (3, 9), (9, 3), (9, 9), (3, 27),
        (3, 3, 3), (3, 3, 9), (3, 3, 3, 3),
    ]
    orders = rng.choice([o for o in candidates if np.prod(o) <= max_size])
    t = len(orders)
    signs = [rng.choice((1, -1)) for _ in range(t)]
    D = [[(signs[i] if i == j else 0) % orders[j] for j in range(t)] for i in range(t)]
    M, Minv = random_automorphism(orders, p, rng)
    images = _hom_matmul(_hom_matmul(Minv, D, orders), M, orders)
    G = GroupSpec(p, orders)
    return InvolutionSpec.from_images(G, [tuple(r) for r in images])


@pytest.fixture
def rng():
    return random.Random(20261015)
