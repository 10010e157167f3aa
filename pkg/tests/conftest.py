from pathlib import Path

import pytest

from quasik.graph import load_edge_list

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fig2_path() -> Path:
    return DATA / "fig2.txt"


@pytest.fixture(scope="session")
def fig2(fig2_path):
    """The 8-vertex fixture graph: a 6-vertex 4-regular block on
    {a,b,c,d,f,g} (every pair adjacent except ab, cd, fg) plus the
    disjoint edge e-h."""
    return load_edge_list(fig2_path)


@pytest.fixture(scope="session")
def fig2_block(fig2):
    return fig2.ids_of("abcdfg")


@pytest.fixture(scope="session")
def fig2_sub(fig2):
    return fig2.ids_of("abcfg")
