import pytest

from cohext.model import scenario_from_dict


def make_doc(n, generators=(), weak=(), strict=(), commutative=False, name="test"):
    """Minimal scenario document with elements e0..e{n-1}."""
    return {
        "name": name,
        "description": "",
        "commutative": commutative,
        "elements": [{"id": i, "label": f"e{i}"} for i in range(n)],
        "generators": [
            {"name": g_name, "map": [[src, dst] for src, dst in table]}
            for g_name, table in generators
        ],
        "weak": [list(p) for p in weak],
        "strict": [list(p) for p in strict],
    }


def make_scenario(*args, **kwargs):
    return scenario_from_dict(make_doc(*args, **kwargs))


@pytest.fixture
def chain3():
    """e0 >= e1 >= e2, no generators."""
    return make_scenario(3, weak=[(0, 1), (1, 2)])


@pytest.fixture
def swap_cycle():
    """e0 > e1 with a generator swapping them: inconsistent after closure."""
    return make_scenario(2, generators=[("swap", [(0, 1), (1, 0)])], strict=[(0, 1)])
