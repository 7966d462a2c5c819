import random

import pytest

from effcone import linalg


@pytest.fixture(scope="session")
def coextremal_rows():
    from effcone.verifier import compute_coextremal_orbits
    return compute_coextremal_orbits()


@pytest.fixture(scope="session")
def tabs():
    from effcone.moduli.generators import generator_tables
    return generator_tables()


def random_pointed_cone(rng: random.Random, dim: int, n: int, spread: int = 3):
    """``n`` integer rays with positive first coordinate spanning ``dim``."""
    while True:
        rays = [tuple([rng.randint(1, spread)] + [rng.randint(-spread, spread) for _ in range(dim - 1)])
                for _ in range(n)]
        if linalg.rank(rays) == dim:
            return rays


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
