import os
from pathlib import Path
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from monideal.core import MonomialIdeal, Ring  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


@st.composite
def ideals(draw, n_max=4, max_gens=5, max_exp=3, n=None, squarefree=False):
    n = n or draw(st.integers(1, n_max))
    top = 1 if squarefree else max_exp
    mono = st.tuples(*[st.integers(0, top)] * n).filter(any)
    gens = draw(st.lists(mono, min_size=1, max_size=max_gens))
    return MonomialIdeal(Ring.standard(n), gens)


@pytest.fixture
def xy():
    return Ring(("x", "y"))


@pytest.fixture
def xyz():
    return Ring(("x", "y", "z"))


@pytest.fixture
def data_dir():
    return Path(DATA).resolve()
