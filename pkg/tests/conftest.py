import pytest

from polarhex.decompose import reconstruct
from polarhex.varieties import sample_p2

_BATCH: dict = {}


def seeded_decompositions(count: int):
    """Reconstructions for seeds 0..count-1, cached across test modules."""
    for seed in range(count):
        if seed not in _BATCH:
            L, M = sample_p2(seed)
            _BATCH[seed] = reconstruct(L, M)
    return [_BATCH[seed] for seed in range(count)]


@pytest.fixture(scope="session")
def batch20():
    return seeded_decompositions(20)
