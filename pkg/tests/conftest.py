import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)


def assert_ulp_close(got, want, ulps=1):
    """Per-entry agreement within `ulps` spacings of the larger magnitude."""
    got = np.asarray(got, dtype=float)
    want = np.asarray(want, dtype=float)
    assert got.shape == want.shape
    tol = ulps * np.spacing(np.maximum(np.abs(got), np.abs(want)))
    diff = np.abs(got - want)
    assert np.all(diff <= tol), (
        f"max deviation {diff.max():.3e} exceeds {ulps} ulp "
        f"(worst entry index {np.unravel_index(diff.argmax(), diff.shape)})"
    )
