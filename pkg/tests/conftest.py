import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from turanlab.core import SimpleGraph

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep test runs from touching the real result cache
    monkeypatch.setenv("TURANLAB_CACHE", str(tmp_path / "cache.jsonl"))


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return SimpleGraph(n)
    density = draw(st.sampled_from([0.15, 0.35, 0.6, 0.9]))
    seed = draw(st.integers(min_value=0, max_value=2**31))
    rng = random.Random(seed)
    edges = [e for e in pairs if rng.random() < density]
    return SimpleGraph.from_edges(n, edges)
