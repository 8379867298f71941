import pytest

from divides import coil, fixtures, from_chords, gen_chords, zigzag

CORPUS_SEEDS = [(3, 11), (3, 12), (4, 20), (4, 21), (5, 7), (5, 8),
                (5, 9), (6, 30), (6, 31), (2, 5)]


def instance_zoo():
    """Every kind of divide the suite knows how to build, as (name, map)."""
    zoo = list(fixtures().items())
    zoo += [(f"zigzag({n})", zigzag(n)) for n in range(1, 7)]
    zoo += [(f"coil({k})", coil(k)) for k in range(1, 6)]
    zoo += [(f"chords(n={n},seed={s})", from_chords(gen_chords(n, s)))
            for n, s in CORPUS_SEEDS]
    return zoo


@pytest.fixture(scope="session")
def zoo():
    return instance_zoo()
