import numpy as np
import pytest

from psifrac import SampledFunction, TransformedGrid, make_builtin


@pytest.fixture
def identity_kernel():
    return make_builtin("identity", (), (0.0, 1.0))


@pytest.fixture
def sqrt_kernel():
    return make_builtin("sqrt_shift", (1.0,), (0.0, 3.0))


@pytest.fixture
def log_kernel():
    return make_builtin("log", (), (1.0, np.e))


def sample(kernel, a, b, n, fn) -> SampledFunction:
    grid = TransformedGrid.build(kernel, a, b, n)
    return SampledFunction.from_callable(grid, fn)


def power_values(grid, delta: float) -> SampledFunction:
    """(psi(x) - psi(a))^(delta-1) sampled without 0**negative warnings."""
    z = grid.tau_nodes - grid.tau_nodes[0]
    vals = np.zeros(grid.n + 1)
    if delta >= 1.0:
        vals[:] = z ** (delta - 1.0)
        if delta == 1.0:
            vals[0] = 1.0
    else:
        vals[1:] = z[1:] ** (delta - 1.0)
    return SampledFunction(grid, vals)
