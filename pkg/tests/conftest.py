import itertools
import random

import pytest

from pilebetti.complex import SimplicialComplex
from pilebetti.lattice import veronese_generators

# (weights, d) instances small enough to tabulate exhaustively
VERONESE_CORPUS = [
    ((1, 1, 1), 2),
    ((1, 2), 1),
    ((1,), 5),
    ((1, 1, 2), 1),
    ((1, 1), 2),
    ((1, 1), 3),
    ((1, 1), 4),
    ((1, 1), 5),
    ((1, 1), 6),
    ((2, 3), 1),
    ((1, 2, 3), 1),
    ((1, 1, 1), 3),
    ((1, 1, 1, 1), 2),
]

SUBLATTICE_EXAMPLE = [(4, 0, 0), (2, 2, 0), (1, 1, 1), (0, 4, 0), (0, 0, 2)]


@pytest.fixture(scope="session")
def surface():
    return veronese_generators((1, 1, 1), 2)


def brute_force_faces(points, predicate):
    """All index subsets S of points (as sorted tuples) with predicate(S)."""
    out = set()
    for k in range(len(points) + 1):
        for S in itertools.combinations(range(len(points)), k):
            if predicate(S):
                out.add(S)
    return out


def random_complex(rng: random.Random, M: int, nfacets: int) -> SimplicialComplex:
    facets = []
    for _ in range(nfacets):
        size = rng.randint(0, M)
        facets.append(rng.sample(range(M), size))
    return SimplicialComplex.from_maximal_faces(M, facets)


# (number, description, passed, seconds, limit) rows filled by test_acceptance
ACCEPTANCE_RESULTS: list[tuple[int, str, bool, float, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, secs, limit in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {num:2d}. {desc} ({secs:.2f}s, limit {limit:g}s)")
