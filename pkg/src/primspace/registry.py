"""Built-in worked examples, addressable as @name from the CLI.

B2M    multiplicative monoid on {0,1} (logical AND)
NULL2  two-element null semigroup, every product is 0
LZ2    two-element left-zero semigroup, x*y = x
T3     three-element chain {1, a, 0} with a*a = 0
B2xB2  direct product B2M x B2M, pairs indexed (s,t) -> 2s+t
R15    free semigroup on {s,x} with every word of length >= 4
       collapsed to a zero; 14 words plus the zero, 15 elements
"""

from __future__ import annotations

import itertools

from .core import FiniteSemigroup, direct_product, validate_table


def _b2m() -> FiniteSemigroup:
    return validate_table(2, [[0, 0], [0, 1]])


def _null2() -> FiniteSemigroup:
    return validate_table(2, [[0, 0], [0, 0]])


def _lz2() -> FiniteSemigroup:
    return validate_table(2, [[0, 0], [1, 1]])


def _t3() -> FiniteSemigroup:
    return validate_table(3, [[0, 1, 2], [1, 2, 2], [2, 2, 2]])


def _r15() -> tuple[FiniteSemigroup, tuple[str, ...]]:
    words = [
        "".join(w)
        for length in (1, 2, 3)
        for w in itertools.product("sx", repeat=length)
    ]
    labels = ("0",) + tuple(words)
    index = {w: i + 1 for i, w in enumerate(words)}
    n = len(labels)

    def mult(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        w = labels[i] + labels[j]
        return index[w] if len(w) <= 3 else 0

    table = [[mult(i, j) for j in range(n)] for i in range(n)]
    return validate_table(n, table), labels


_B2M = _b2m()
_R15, _R15_LABELS = _r15()

REGISTRY: dict[str, FiniteSemigroup] = {
    "B2M": _B2M,
    "NULL2": _null2(),
    "LZ2": _lz2(),
    "T3": _t3(),
    "B2xB2": direct_product(_B2M, _B2M),
    "R15": _R15,
}

LABELS: dict[str, tuple[str, ...]] = {
    "B2M": ("0", "1"),
    "NULL2": ("0", "a"),
    "LZ2": ("a", "b"),
    "T3": ("1", "a", "0"),
    "B2xB2": ("00", "01", "10", "11"),
    "R15": _R15_LABELS,
}


def names() -> list[str]:
    return sorted(REGISTRY)


def lookup(name: str) -> FiniteSemigroup:
    """Registry lookup by name, case sensitive; raises KeyError."""
    return REGISTRY[name]


def label_index(name: str, label: str) -> int:
    """Element index of a label, e.g. label_index("R15", "sxs")."""
    return LABELS[name].index(label)
