import pytest
from hypothesis import settings

from codepoly.algebra import extension_field, integer_ring, prime_field
from codepoly.codes import enumerate_codewords

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F2 = prime_field(2)
F3 = prime_field(3)
F4 = extension_field(2, 2, (1, 1, 1))
Z4 = integer_ring(4)
Z6 = integer_ring(6)

# (ring, generators) of the standard test corpus
CORPUS = [
    ("F2_11", F2, [(1, 1)]),
    ("F2_111", F2, [(1, 1, 1)]),
    ("F2_even3", F2, [(1, 1, 0), (0, 1, 1)]),
    ("F3_C2", F3, [(1, 1)]),
    ("F4_11", F4, [(1, 1)]),
    ("Z4_11", Z4, [(1, 1)]),
    ("Z4_22", Z4, [(2, 2)]),
    ("Z6_11", Z6, [(1, 1)]),
]


def corpus_codes():
    return [(name, enumerate_codewords(gens, ring, name=name)) for name, ring, gens in CORPUS]


@pytest.fixture(scope="session")
def C2():
    return enumerate_codewords([(1, 1)], F3, name="C2")


@pytest.fixture(scope="session")
def rep3():
    return enumerate_codewords([(1, 1, 1)], F2)


@pytest.fixture(scope="session")
def even2():
    return enumerate_codewords([(1, 1)], F2)
