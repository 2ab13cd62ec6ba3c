"""Shared corpora for the exhaustive tests.

The labeled corpora are tiny (1, 8, and 113 semigroups at orders 1-3),
so they are built once at import and reused everywhere.
"""

from functools import lru_cache

from primspace.core import enumerate_semigroups, validate_table


@lru_cache(maxsize=None)
def corpus_up_to(max_order: int) -> tuple:
    """Every labeled semigroup of order 1..max_order, enumeration order."""
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_semigroups(n))
    return tuple(out)


def cyclic_group(n: int):
    """Z/n as a semigroup (addition mod n)."""
    return validate_table(n, [[(i + j) % n for j in range(n)] for i in range(n)])


# every product is f(column) with f = (1, 1, 2); its single proper ideal
# {1, 2} is not prime, but only the pair (S, S) shows it
RIGHT_CONSTANT = ((1, 1, 2), (1, 1, 2), (1, 1, 2))
