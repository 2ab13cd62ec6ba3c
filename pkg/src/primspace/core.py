"""Finite semigroups presented by Cayley tables.

Elements are dense indices 0..n-1.  Subsets are passed around as integer
bitmasks (bit i set iff element i is a member), which keeps membership
and set algebra cheap for the orders this package targets (n <= 16).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BoundExceededError,
    NonAssociativeError,
    NotHomomorphismError,
    OutOfRangeError,
)

Table = tuple[tuple[int, ...], ...]

# Orders above this are refused by the enumerator unless the caller
# explicitly raises the limit (the count explodes quickly past 5).
MAX_ENUM_ORDER = 5

DEDUP_NONE = "none"
DEDUP_UP_TO_ISO = "up_to_iso_and_anti_iso"


def mask_of(elements) -> int:
    """Bitmask of an iterable of element indices."""
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    """Sorted element indices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class FiniteSemigroup:
    """An associative Cayley table over elements 0..order-1.

    `identity` is the two-sided identity if one exists (there is at most
    one).  Instances are produced by `validate_table`; constructing one
    directly skips validation.
    """

    order: int
    table: Table
    identity: int | None = None

    def product(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def _bit_table(self) -> tuple[tuple[int, ...], ...]:
        # _bit_table[a][b] == 1 << table[a][b], for mask-valued products
        return tuple(tuple(1 << v for v in row) for row in self.table)


def find_identity(table: Table) -> int | None:
    n = len(table)
    ids = [
        e
        for e in range(n)
        if all(table[e][x] == x and table[x][e] == x for x in range(n))
    ]
    # two two-sided identities e, f would force e = e*f = f
    assert len(ids) <= 1
    return ids[0] if ids else None


def validate_table(order: int, table) -> FiniteSemigroup:
    """Check shape, entry range, and associativity; return the semigroup.

    Raises OutOfRangeError on malformed input and NonAssociativeError
    naming the first failing triple in lexicographic scan order.
    """
    if order < 1:
        raise OutOfRangeError(f"order must be >= 1, got {order}")
    rows = [tuple(r) for r in table]
    if len(rows) != order or any(len(r) != order for r in rows):
        raise OutOfRangeError(f"table is not {order}x{order}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < order:
                raise OutOfRangeError(f"cell ({i},{j}) = {v!r} out of range")
    t = tuple(rows)
    for i in range(order):
        ti = t[i]
        for j in range(order):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(order):
                if tij[k] != ti[tj[k]]:
                    raise NonAssociativeError(i, j, k)
    return FiniteSemigroup(order, t, find_identity(t))


def set_product(sg: FiniteSemigroup, a_mask: int, b_mask: int) -> int:
    """Mask of {a*b : a in A, b in B}."""
    bits = sg._bit_table
    out = 0
    am = a_mask
    while am:
        low = am & -am
        am ^= low
        row = bits[low.bit_length() - 1]
        bm = b_mask
        while bm:
            lob = bm & -bm
            bm ^= lob
            out |= row[lob.bit_length() - 1]
    return out


def relabel(table: Table, perm) -> Table:
    """Apply a relabeling permutation: new[p(i)][p(j)] = p(old[i][j])."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row = out[perm[i]]
        ti = table[i]
        for j in range(n):
            row[perm[j]] = perm[ti[j]]
    return tuple(tuple(r) for r in out)


def transpose(table: Table) -> Table:
    n = len(table)
    return tuple(tuple(table[j][i] for j in range(n)) for i in range(n))


def canonical_form(table: Table, include_transpose: bool = True) -> Table:
    """Lexicographically least relabeling, optionally also over the transpose.

    With `include_transpose` the orbit is isomorphism plus anti-isomorphism;
    without it, isomorphism only.
    """
    n = len(table)
    variants = [table]
    if include_transpose:
        variants.append(transpose(table))
    best = None
    for var in variants:
        for perm in itertools.permutations(range(n)):
            cand = relabel(var, perm)
            if best is None or cand < best:
                best = cand
    return best


def canonical_form_with_perm(table: Table) -> tuple[Table, tuple[int, ...]]:
    """Iso-only canonical form plus a permutation achieving it.

    Returns (canon, perm) with relabel(table, perm) == canon.  The first
    permutation (in itertools order) reaching the minimum is kept.
    """
    best = None
    best_perm = None
    for perm in itertools.permutations(range(len(table))):
        cand = relabel(table, perm)
        if best is None or cand < best:
            best, best_perm = cand, perm
    return best, best_perm


def _extends_associatively(table: list[list[int]], i: int, j: int) -> bool:
    """Partial-table check: revisit exactly the triples completed by cell (i,j).

    A triple (a,b,c) needs cells (a,b), (b,c), (a*b,c), (a,b*c); it is
    tested the moment its last needed cell is filled.  Undefined cells
    are -1.
    """
    n = len(table)
    v = table[i][j]
    # triples (i, j, c)
    row_v = table[v]
    row_i = table[i]
    row_j = table[j]
    for c in range(n):
        left = row_v[c]
        jc = row_j[c]
        if left >= 0 and jc >= 0:
            right = row_i[jc]
            if right >= 0 and left != right:
                return False
    # triples (a, i, j)
    for a in range(n):
        ra = table[a]
        ai = ra[i]
        av = ra[v]
        if ai >= 0 and av >= 0:
            left = table[ai][j]
            if left >= 0 and left != av:
                return False
    # triples (a, b, j) with a*b == i, and (i, b, c) with b*c == j
    for b in range(n):
        rb = table[b]
        for a in range(n):
            if table[a][b] == i:
                bj = rb[j]
                if bj >= 0:
                    right = table[a][bj]
                    if right >= 0 and right != v:
                        return False
        ib = row_i[b]
        if ib >= 0:
            rib = table[ib]
            for c in range(n):
                if rb[c] == j:
                    left = rib[c]
                    if left >= 0 and left != v:
                        return False
    return True


def _associative_tables(n: int):
    """Yield all associative n x n tables in lexicographic (row-major) order."""
    table = [[-1] * n for _ in range(n)]
    cells = [divmod(m, n) for m in range(n * n)]

    def fill(m: int):
        if m == n * n:
            yield tuple(tuple(r) for r in table)
            return
        i, j = cells[m]
        for v in range(n):
            table[i][j] = v
            if _extends_associatively(table, i, j):
                yield from fill(m + 1)
        table[i][j] = -1

    yield from fill(0)


def enumerate_semigroups(
    order: int,
    dedup: str = DEDUP_NONE,
    max_order: int = MAX_ENUM_ORDER,
):
    """Yield all semigroups of the given order, lexicographic by table.

    dedup="none" yields every labeled table; "up_to_iso_and_anti_iso"
    yields only canonical representatives (least table in the orbit under
    relabeling and transpose).  Orders above `max_order` are refused.
    """
    if order < 1:
        raise OutOfRangeError(f"order must be >= 1, got {order}")
    if order > max_order:
        raise BoundExceededError(
            f"order {order} exceeds the enumeration bound {max_order}"
        )
    if dedup not in (DEDUP_NONE, DEDUP_UP_TO_ISO):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    for t in _associative_tables(order):
        if dedup == DEDUP_UP_TO_ISO and canonical_form(t) != t:
            continue
        yield FiniteSemigroup(order, t, find_identity(t))


@dataclass(frozen=True)
class SemigroupHom:
    """A verified multiplicative map between two finite semigroups."""

    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple[int, ...]

    def apply(self, s: int) -> int:
        return self.map[s]


def check_homomorphism(
    source: FiniteSemigroup, target: FiniteSemigroup, mapping
) -> SemigroupHom:
    """Validate phi(s*t) = phi(s)*phi(t) for all pairs, scanned lexicographically.

    Raises OutOfRangeError on shape problems and NotHomomorphismError
    naming the first failing pair.
    """
    m = tuple(mapping)
    if len(m) != source.order:
        raise OutOfRangeError(
            f"map has length {len(m)}, source has order {source.order}"
        )
    for s, v in enumerate(m):
        if not 0 <= v < target.order:
            raise OutOfRangeError(f"map[{s}] = {v} out of target range")
    ts, tt = source.table, target.table
    for s in range(source.order):
        for t in range(source.order):
            if m[ts[s][t]] != tt[m[s]][m[t]]:
                raise NotHomomorphismError(s, t)
    return SemigroupHom(source, target, m)


def direct_product(a: FiniteSemigroup, b: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product on pairs, index (s,t) -> s*|b| + t."""
    nb = b.order
    n = a.order * nb
    ta, tb = a.table, b.table
    table = tuple(
        tuple(
            ta[i // nb][j // nb] * nb + tb[i % nb][j % nb] for j in range(n)
        )
        for i in range(n)
    )
    return FiniteSemigroup(n, table, find_identity(table))
