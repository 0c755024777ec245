"""Integer row reduction and diagonalization for subgroup bases.

A subgroup ``H`` of ``G = Z^t / diag(q) Z^t`` given by generator exponent
vectors is decomposed into cyclic factors: with ``B`` a basis of the
preimage lattice ``L = rowspan(gens) + diag(q) Z^t`` and
``C = diag(q) B^-1``, any unimodular diagonalization ``U C V = D`` gives
``H = L / diag(q)Z^t`` as ``sum Z/d_i`` with generators the rows of
``V^-1 B``.
"""

from dataclasses import dataclass


def row_basis(rows, t):
    """Upper-triangular basis of the row lattice of ``rows`` (must be full rank ``t``)."""
    work = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(t):
        while True:
            live = [r for r in work if r[col] != 0]
            if len(live) <= 1:
                break
            pivot = min(live, key=lambda r: abs(r[col]))
            for r in live:
                if r is not pivot:
                    f = r[col] // pivot[col]
                    for k in range(col, t):
                        r[k] -= f * pivot[k]
            work = [r for r in work if any(r)]
        live = [r for r in work if r[col] != 0]
        if not live:
            raise ValueError(f"lattice is not full rank (column {col})")
        pivot = live[0]
        if pivot[col] < 0:
            pivot[:] = [-v for v in pivot]
        basis.append(pivot)
        work = [r for r in work if r is not pivot]
    return basis


def solve_upper(B, v):
    """Integer ``y`` with ``y B = v`` for upper-triangular ``B``."""
    t = len(B)
    y = [0] * t
    for j in range(t):
        rest = v[j] - sum(y[i] * B[i][j] for i in range(j))
        if rest % B[j][j]:
            raise ValueError(f"{v} is not in the lattice")
        y[j] = rest // B[j][j]
    return y


def diagonalize_columns(C):
    """Unimodular row/column reduction of a square matrix to diagonal form.

    Returns ``(diag, V, W)`` where ``V`` accumulates the column operations and
    ``W = V^-1``.  No divisibility chain is enforced on ``diag``.
    """
    A = [list(r) for r in C]
    t = len(A)
    V = [[int(i == j) for j in range(t)] for i in range(t)]
    W = [row[:] for row in V]

    def col_add(j, k, f):
        # column j -= f * column k
        for r in A:
            r[j] -= f * r[k]
        for r in V:
            r[j] -= f * r[k]
        for c in range(t):
            W[k][c] += f * W[j][c]

    def col_swap(j, k):
        for M in (A, V):
            for r in M:
                r[j], r[k] = r[k], r[j]
        W[j], W[k] = W[k], W[j]

    for k in range(t):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(k, t) for j in range(k, t) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            A[k], A[i] = A[i], A[k]
            if j != k:
                col_swap(j, k)
            piv = A[k][k]
            for i in range(k + 1, t):
                f = A[i][k] // piv
                if f:
                    A[i] = [a - f * b for a, b in zip(A[i], A[k])]
            for j in range(k + 1, t):
                f = A[k][j] // piv
                if f:
                    col_add(j, k, f)
            if all(A[i][k] == 0 for i in range(k + 1, t)) and all(
                A[k][j] == 0 for j in range(k + 1, t)
            ):
                break
    return [abs(A[i][i]) for i in range(t)], V, W


@dataclass(frozen=True)
class CyclicDecomposition:
    """Subgroup ``H <= Z^t/diag(q)`` as a direct product of cyclic groups."""

    moduli: tuple
    generators: tuple
    orders: tuple
    _B: tuple
    _V: tuple
    _keep: tuple

    def coordinates(self, v):
        """Exponents of ``v`` (an element of ``H``) with respect to ``generators``."""
        t = len(self.moduli)
        y = solve_upper(self._B, list(v))
        z = [sum(y[i] * self._V[i][j] for i in range(t)) for j in range(t)]
        return tuple(z[j] % self.orders[n] for n, j in enumerate(self._keep))


def cyclic_decomposition(gens, moduli):
    t = len(moduli)
    relations = [[q if i == j else 0 for j in range(t)] for i, q in enumerate(moduli)]
    B = row_basis([list(g) for g in gens] + relations, t)
    C = [solve_upper(B, rel) for rel in relations]
    diag, V, W = diagonalize_columns(C)
    keep = [j for j in range(t) if diag[j] != 1]
    generators = []
    for j in keep:
        row = [sum(W[j][i] * B[i][c] for i in range(t)) for c in range(t)]
        generators.append(tuple(x % q for x, q in zip(row, moduli)))
    return CyclicDecomposition(
        moduli=tuple(moduli),
        generators=tuple(generators),
        orders=tuple(diag[j] for j in keep),
        _B=tuple(tuple(r) for r in B),
        _V=tuple(tuple(r) for r in V),
        _keep=tuple(keep),
    )
