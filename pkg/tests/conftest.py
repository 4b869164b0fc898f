import random

import pytest

from loopschur import Monomial, Partition, Polynomial


def brute_partitions(total: int, largest: int | None = None):
    """All partitions of ``total``, independent of the package's own code."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in brute_partitions(total - first, first):
            yield (first,) + rest


def random_polynomial(rng: random.Random, n: int, max_terms: int = 4) -> Polynomial:
    """Small random polynomial in the modulus-n ring."""
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        factors = {}
        for _ in range(rng.randrange(1, 4)):
            color = rng.randrange(n)
            weight_num = rng.randrange(-2 * n, 4 * n + 1)
            factors[(color, weight_num)] = rng.randrange(1, 4)
        coeff = rng.choice([-5, -3, -2, -1, 1, 2, 3, 7])
        m = Monomial.from_exponents(factors)
        terms[m] = terms.get(m, 0) + coeff
    return Polynomial(n, terms)


@pytest.fixture
def rng():
    return random.Random(20240917)
