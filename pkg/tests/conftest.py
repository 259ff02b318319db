import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fcmj.model import Component, Instance, Module  # noqa: E402

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def figure1(K0=3, K1=2, K2=1, f1=5, f2=6):
    return Instance(
        components=(Component("1", Fraction(K1), f1), Component("2", Fraction(K2), f2)),
        modules=(Module("0", Fraction(K0)),),
        edges=(("0", "1"), ("0", "2")),
        root="0",
    )


def random_instance(rng: random.Random, max_components=4, max_modules=2, max_limit=10, mode="descendants"):
    """Random valid tree: a root, optionally one sub-module, components hung below."""
    n_comp = rng.randint(1, max_components)
    n_mod = rng.randint(1, max_modules)

    def cost():
        return Fraction(rng.randint(0, 12), rng.randint(1, 4))

    modules = [Module("r", cost())]
    edges = []
    if n_mod == 2:
        modules.append(Module("m", cost()))
        edges.append(("r", "m"))
    comps = []
    for i in range(1, n_comp + 1):
        comps.append(Component(str(i), cost(), rng.randint(1, max_limit)))
    parents = [rng.choice([m.id for m in modules]) for _ in comps]
    if n_mod == 2 and "m" not in parents:
        parents[0] = "m"
    edges += [(p, c.id) for p, c in zip(parents, comps)]
    return Instance(tuple(comps), tuple(modules), tuple(edges), "r", mode)


@pytest.fixture
def fig1():
    return figure1()
