import pytest

from acbench.presentations.fixtures import free_abelian, metabelian, seed_s, trivial
from acbench.search.bfs import SearchCaps
from acbench.solvers.area import AreaCaps
from acbench.trivializer import plan_for_wn
from acbench.words import Alphabet


@pytest.fixture()
def ab():
    return Alphabet(["a", "b"])


@pytest.fixture()
def s2():
    return seed_s(2)


@pytest.fixture()
def q1():
    return free_abelian()


@pytest.fixture()
def q2():
    return metabelian()


@pytest.fixture()
def trivial2():
    return trivial(2)


@pytest.fixture()
def small_area_caps():
    return AreaCaps(max_states=50_000)


@pytest.fixture()
def small_search_caps():
    return SearchCaps(max_relator_len=8, max_conjugator_len=1, max_states=50_000)


@pytest.fixture()
def s2_plan():
    return plan_for_wn(2)

