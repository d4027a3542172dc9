import pytest

from staralg import pair_of

# the four pairs everything is exercised over: classical, geometric,
# doubly exponential, and a curved alpha with exponential beta
PAIR_NAMES = [
    ("identity", "identity"),
    ("identity", "exp"),
    ("exp", "exp"),
    ("cube", "exp"),
]


@pytest.fixture(params=PAIR_NAMES, ids=lambda p: f"{p[0]}-{p[1]}")
def pair(request):
    return pair_of(*request.param)
