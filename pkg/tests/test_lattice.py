import random

from fgunits.lattice import cyclic_decomposition


def span(gens, moduli):
    seen = {tuple(0 for _ in moduli)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % q for a, b, q in zip(x, g, moduli))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_decomposition_matches_brute_force_span():
    r = random.Random(7)
    for moduli in [(3,), (9,), (3, 3), (3, 9), (9, 27), (3, 3, 9), (5, 25)]:
        for _ in range(15):
            k = r.randrange(0, 4)
            gens = [tuple(r.randrange(q) for q in moduli) for _ in range(k)]
            dec = cyclic_decomposition(gens, moduli)
            target = span(gens, moduli)
            prod = 1
            for o in dec.orders:
                prod *= o
            assert prod == len(target)
            assert span(dec.generators, moduli) == target
            # every element has coordinates that reproduce it
            for v in target:
                z = dec.coordinates(v)
                back = tuple(
                    sum(c * g[j] for c, g in zip(z, dec.generators)) % q
                    for j, q in enumerate(moduli)
                )
                assert back == v


def test_empty_and_full():
    assert cyclic_decomposition([], (9, 3)).orders == ()
    dec = cyclic_decomposition([(1, 0), (0, 1)], (9, 3))
    assert sorted(dec.orders) == [3, 9]
