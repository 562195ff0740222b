import numpy as np
import pytest
from hypothesis import settings

from framespec.frames import Frame

# Fixed seed for every randomized suite; change only together with a note.
SEED = 20240917

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repro")


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_parseval(rng, dim, n):
    """Rows of the first ``dim`` columns of a random n x n unitary."""
    u = random_unitary(rng, n)
    return Frame(dim, u[:, :dim])


def random_hermitian(rng, n, scale=1.0):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (z + z.conj().T) / 2


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
