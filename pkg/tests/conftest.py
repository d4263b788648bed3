import numpy as np

from hypercut import Hypergraph, SymmetricMatrix


def random_multigraph(n: int, seed: int, density: float = 0.6, max_mult: int = 3) -> Hypergraph:
    """Random 2-uniform multigraph with integer multiplicities."""
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.append(((u, v), int(rng.integers(1, max_mult + 1))))
    return Hypergraph.from_edges(2, n, edges)


def random_symmetric(n: int, seed: int, zero_diag: bool = False, trace_free: bool = False) -> SymmetricMatrix:
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    a = a + a.T
    if zero_diag:
        np.fill_diagonal(a, 0.0)
    elif trace_free:
        np.fill_diagonal(a, np.diag(a) - np.trace(a) / n)
    return SymmetricMatrix(a)
