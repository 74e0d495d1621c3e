import pytest

from seymour.codes import LinearCode


@pytest.fixture(scope="session")
def simplex():
    return LinearCode.from_strings(["1000111", "0101011", "0011101"])


@pytest.fixture(scope="session")
def hamming_g():
    """First published [7,4] Hamming generator of the 3-sum example."""
    return LinearCode.from_strings(["1100001", "1010010", "0110100", "1111000"])


@pytest.fixture(scope="session")
def hamming_gp():
    """Second published [7,4] Hamming generator of the 3-sum example."""
    return LinearCode.from_strings(["1000011", "0100101", "0010110", "0001111"])


@pytest.fixture(scope="session")
def code_12_5():
    """The [12,5,4] 2-sum of two simplex codes, as published."""
    return LinearCode.from_strings(
        [
            "100011000111",
            "010101000111",
            "001110000111",
            "000000101011",
            "000000011101",
        ]
    )


@pytest.fixture(scope="session")
def ext_hamming8():
    return LinearCode.from_strings(["10010011", "01010101", "00110110", "00001111"])


@pytest.fixture(scope="session")
def code_841_pair():
    """[7,4,1] and [7,4,3] codes whose 3-sum is the published [8,4,1]."""
    c1 = LinearCode.from_strings(["1000000", "0101001", "0011010", "1110100"])
    c2 = LinearCode.from_strings(["1000110", "0100101", "0010011", "0001111"])
    return c1, c2


@pytest.fixture(scope="session")
def code_841():
    return LinearCode.from_strings(["10000000", "01010011", "00110101", "00001111"])
