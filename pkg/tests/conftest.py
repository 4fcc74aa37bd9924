import pytest

from netring import networks, rings


def make_ring(desc):
    return rings.construct_ring(desc)


@pytest.fixture(scope="session")
def gf2():
    return make_ring(rings.PrimeField(2))


@pytest.fixture(scope="session")
def gf3():
    return make_ring(rings.PrimeField(3))


@pytest.fixture(scope="session")
def gf4():
    return make_ring(rings.GaloisField(2, 2))


@pytest.fixture(scope="session")
def z4():
    return make_ring(rings.IntegersMod(4))


@pytest.fixture(scope="session")
def m2f2():
    return make_ring(rings.MatrixRing(rings.PrimeField(2), 2))


# hand-built miniature networks for oracle cross-checks --------------------

def wire2_network():
    """Two messages forced through a single edge: never solvable."""
    return networks.Network(["s", "t"], [("s", "t")],
                            [("m1", "s"), ("m2", "s")],
                            {"t": ("m1", "m2")})


def pair_network():
    """Two messages over two parallel edges: always solvable."""
    return networks.Network(["s", "t"], [("s", "t", 0), ("s", "t", 1)],
                            [("m1", "s"), ("m2", "s")],
                            {"t": ("m1", "m2")})


def chain_network():
    """One message relayed through an intermediate node."""
    return networks.Network(["s", "u", "t"], [("s", "u"), ("u", "t")],
                            [("m", "s")], {"t": ("m",)})


def starve_network():
    """Two messages through a two-hop single path: never solvable."""
    return networks.Network(["s", "v", "t"], [("s", "v"), ("v", "t")],
                            [("m1", "s"), ("m2", "s")],
                            {"t": ("m1", "m2")})


def chain2_network():
    """Two messages over a two-edge-wide, two-hop relay."""
    return networks.Network(
        ["s", "u", "t"],
        [("s", "u", 0), ("s", "u", 1), ("u", "t", 0), ("u", "t", 1)],
        [("m1", "s"), ("m2", "s")],
        {"t": ("m1", "m2")})
