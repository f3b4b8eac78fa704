import numpy as np
import pytest


@pytest.fixture(scope="session")
def graphic_multisets_7():
    """Degree multisets of all labeled simple graphs on 7 vertices.

    Built by enumerating every edge subset once; sequences of length < 7
    are looked up after zero-padding (isolated vertices are free).
    """
    n = 7
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    masks = np.arange(1 << m, dtype=np.uint32)
    deg = np.zeros((1 << m, n), dtype=np.uint8)
    for e, (i, j) in enumerate(pairs):
        bit = ((masks >> e) & 1).astype(np.uint8)
        deg[:, i] += bit
        deg[:, j] += bit
    deg.sort(axis=1)
    return {tuple(int(x) for x in row) for row in np.unique(deg, axis=0)}
