"""Matrix actions of finite semigroups on small prime-field spaces.

A module here is F_p^k together with one k x k matrix over F_p per
semigroup element such that rho[s*t] = rho[s] @ rho[t].  For matrix
actions additivity is built in, so multiplicativity is the only axiom
that needs checking.

Two reductions keep the catalog of candidate module spaces finite and
are relied on throughout:

* A simple finite module is an elementary abelian p-group.  For a prime
  p dividing |M| the subgroup pM = {p*m} is proper and invariant under
  any action (s(pm) = p(sm) by additivity), so simplicity forces pM = 0.
  `primspace.abelian` re-derives this mechanically on the two abelian
  groups of order 4.
* A subgroup of F_p^k closed under the action is automatically an
  F_p-subspace (scalar multiples are repeated sums).  Submodules and
  action-invariant subspaces therefore coincide, and simplicity is
  decidable on the finite list of proper nontrivial subspaces.

Simplicity itself reduces to two cheap facts.  The span of all images
sum_s im(rho[s]) is an invariant subspace, so if no proper nontrivial
invariant subspace exists, that span is 0 or everything.  Hence an
action is simple iff some rho[s] is nonzero and no proper nontrivial
subspace is invariant under every rho[s].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSemigroup
from .errors import BudgetExceededError, DimensionMismatchError

Matrix = tuple[tuple[int, ...], ...]

# Exploration budget for one enumerate_actions call (candidate
# assignments examined), overridable per call or via the CLI.
DEFAULT_BUDGET = 5_000_000

# Below this many total assignments the enumerator scans every tuple
# instead of backtracking over generators.
EXHAUSTIVE_LIMIT = 4096

# Largest matrix monoid we are willing to table (|End| = p^(k*k)).
DENSE_MATS_LIMIT = 4096


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ModuleSpace:
    """The space F_p^k that a semigroup may act on."""

    p: int
    k: int

    def __post_init__(self):
        if not _is_prime_int(self.p):
            raise DimensionMismatchError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise DimensionMismatchError(f"k = {self.k} must be >= 1")


@dataclass(frozen=True)
class ActionWitness:
    """One matrix per semigroup element, in element order."""

    space: ModuleSpace
    rho: tuple[Matrix, ...]


def _matmul(a: Matrix, b: Matrix, p: int, k: int) -> Matrix:
    return tuple(
        tuple(sum(a[i][l] * b[l][j] for l in range(k)) % p for j in range(k))
        for i in range(k)
    )


def _matvec(m: Matrix, v: tuple[int, ...], p: int, k: int) -> tuple[int, ...]:
    return tuple(sum(m[i][l] * v[l] for l in range(k)) % p for i in range(k))


class _SpaceData:
    """Per-(p,k) precomputation: the matrix monoid as an index table.

    Matrices are indexed by their entry sequence read as a base-p number
    (row-major, first entry most significant); index 0 is the zero
    matrix.  `mul` is the dense multiplication table on indices, and
    `inv_masks[m]` has bit j set iff matrix m maps subspace j into
    itself.
    """

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.n_mats = p ** (k * k)
        if self.n_mats > DENSE_MATS_LIMIT:
            raise BudgetExceededError(
                f"matrix space p={p} k={k} has {self.n_mats} matrices, "
                f"over the {DENSE_MATS_LIMIT} limit"
            )
        self.mats = [
            tuple(ent[i * k : (i + 1) * k] for i in range(k))
            for ent in itertools.product(range(p), repeat=k * k)
        ]
        q = p**k
        # row i of a matrix as a base-p integer; the matrix index is the
        # base-q integer whose digits are its row integers
        rows_of = [
            [sum(row[j] * p ** (k - 1 - j) for j in range(k)) for row in m]
            for m in self.mats
        ]
        coords = [
            tuple((v // p ** (k - 1 - j)) % p for j in range(k)) for v in range(q)
        ]
        # vecmat[v][b]: row-vector v times matrix b, as a row integer
        vecmat = [[0] * self.n_mats for _ in range(q)]
        for v in range(q):
            cv = coords[v]
            row_v = vecmat[v]
            for b, mb in enumerate(self.mats):
                acc = 0
                for j in range(k):
                    acc = acc * p + sum(cv[l] * mb[l][j] for l in range(k)) % p
                row_v[b] = acc
        weights = [q ** (k - 1 - i) for i in range(k)]
        self.mul = [
            [
                sum(vecmat[ra[i]][b] * weights[i] for i in range(k))
                for b in range(self.n_mats)
            ]
            for ra in (rows_of[a] for a in range(self.n_mats))
        ]
        self.subspaces = _proper_subspaces(p, k)
        self.inv_masks = []
        for m in self.mats:
            bitset = 0
            for j, sub in enumerate(self.subspaces):
                if all(_matvec(m, w, p, k) in sub for w in sub):
                    bitset |= 1 << j
            self.inv_masks.append(bitset)

    def index_of(self, m: Matrix) -> int:
        p, k = self.p, self.k
        if len(m) != k or any(len(r) != k for r in m):
            raise DimensionMismatchError(f"expected a {k}x{k} matrix")
        acc = 0
        for row in m:
            for e in row:
                if not isinstance(e, int) or not 0 <= e < p:
                    raise DimensionMismatchError(f"entry {e!r} not in [0,{p})")
                acc = acc * p + e
        return acc


def _proper_subspaces(p: int, k: int) -> list[frozenset]:
    """Proper nontrivial subspaces of F_p^k as vector sets, deterministic order."""
    vectors = list(itertools.product(range(p), repeat=k))
    nonzero = [v for v in vectors if any(v)]
    found = set()
    for r in range(1, k):
        for combo in itertools.combinations(nonzero, r):
            span = set()
            for coeffs in itertools.product(range(p), repeat=r):
                span.add(
                    tuple(
                        sum(c * vec[i] for c, vec in zip(coeffs, combo)) % p
                        for i in range(k)
                    )
                )
            if len(span) == p**r:
                found.add(frozenset(span))
    return sorted(found, key=lambda s: sorted(s))


_SPACE_CACHE: dict[tuple[int, int], _SpaceData] = {}


def _space(p: int, k: int) -> _SpaceData:
    key = (p, k)
    if key not in _SPACE_CACHE:
        _SPACE_CACHE[key] = _SpaceData(p, k)
    return _SPACE_CACHE[key]


def _subsemigroup_closure(table, base: set[int]) -> set[int]:
    closed = set(base)
    while True:
        new = {
            table[a][b]
            for a in closed
            for b in closed
            if table[a][b] not in closed
        }
        if not new:
            return closed
        closed |= new


@lru_cache(maxsize=None)
def _action_program(sg: FiniteSemigroup):
    """Backtracking plan: per generator, forced products and consistency checks.

    Returns a tuple of stages (gen, derivations, checks).  Fixing the
    images of the generators one stage at a time, `derivations` lists
    (w, u, v) with w = u*v newly reachable (so rho[w] is forced), and
    `checks` lists (u, v, w) products among reachable elements that must
    agree with the forced values.  After the last stage every element is
    assigned and every product pair has been checked exactly once.
    """
    n, t = sg.order, sg.table
    stages = []
    determined: list[int] = []
    det_set: set[int] = set()
    while len(det_set) < n:
        best_e, best_cl = -1, None
        for e in range(n):
            if e in det_set:
                continue
            cl = _subsemigroup_closure(t, det_set | {e})
            if best_cl is None or len(cl) > len(best_cl):
                best_e, best_cl = e, cl
        g = best_e
        new = [g]
        new_set = {g}
        det_set.add(g)
        derivs = []
        deriv_pairs = set()
        # breadth-first closure with a fixed scan order, so the program
        # (and hence the enumeration order) is reproducible
        while True:
            added = False
            snapshot = determined + new
            for u in snapshot:
                tu = t[u]
                for v in snapshot:
                    w = tu[v]
                    if w not in det_set:
                        derivs.append((w, u, v))
                        deriv_pairs.add((u, v))
                        det_set.add(w)
                        new.append(w)
                        new_set.add(w)
                        added = True
            if not added:
                break
        checks = []
        all_elems = determined + new
        for u in all_elems:
            tu = t[u]
            for v in all_elems:
                if (u in new_set or v in new_set) and (u, v) not in deriv_pairs:
                    checks.append((u, v, tu[v]))
        stages.append((g, tuple(derivs), tuple(checks)))
        determined = all_elems
    return tuple(stages)


def _enumerate_action_indices(
    sg: FiniteSemigroup, space: ModuleSpace, budget: int | None = None
) -> list[tuple[int, ...]]:
    """All multiplicative assignments as matrix-index tuples, ascending.

    Ascending on the index tuple equals ascending on the concatenated
    entry sequence, since a matrix index is its entry sequence in base p.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    data = _space(space.p, space.k)
    n = sg.order
    n_mats = data.n_mats
    mul = data.mul
    t = sg.table
    total = n_mats**n
    if total <= EXHAUSTIVE_LIMIT:
        if total > budget:
            raise BudgetExceededError(
                f"exhaustive scan needs {total} assignments, budget {budget}"
            )
        out = []
        pairs = [(u, v, t[u][v]) for u in range(n) for v in range(n)]
        for cand in itertools.product(range(n_mats), repeat=n):
            for u, v, w in pairs:
                if mul[cand[u]][cand[v]] != cand[w]:
                    break
            else:
                out.append(cand)
        return out
    stages = _action_program(sg)
    val = [-1] * n
    results: list[tuple[int, ...]] = []
    explored = 0

    def dfs(idx: int):
        nonlocal explored
        if idx == len(stages):
            results.append(tuple(val))
            return
        g, derivs, checks = stages[idx]
        for cand in range(n_mats):
            explored += 1
            if explored > budget:
                raise BudgetExceededError(
                    f"action search exceeded budget {budget}"
                )
            val[g] = cand
            ok = True
            for w, u, v in derivs:
                val[w] = mul[val[u]][val[v]]
            for u, v, w in checks:
                if mul[val[u]][val[v]] != val[w]:
                    ok = False
                    break
            if ok:
                dfs(idx + 1)

    dfs(0)
    results.sort()
    return results


def _witness_from_indices(
    data: _SpaceData, space: ModuleSpace, idx: tuple[int, ...]
) -> ActionWitness:
    return ActionWitness(space, tuple(data.mats[i] for i in idx))


def enumerate_actions(
    sg: FiniteSemigroup, space: ModuleSpace, budget: int | None = None
):
    """Yield every multiplicative action of sg on the space, each exactly once.

    Order is deterministic: ascending on the concatenated matrix entry
    sequence.  Raises BudgetExceededError when the search would explore
    more candidate assignments than the budget allows.
    """
    data = _space(space.p, space.k)
    for idx in _enumerate_action_indices(sg, space, budget):
        yield _witness_from_indices(data, space, idx)


def _validated_rho(sg: FiniteSemigroup, witness: ActionWitness):
    p, k = witness.space.p, witness.space.k
    if len(witness.rho) != sg.order:
        raise DimensionMismatchError(
            f"witness has {len(witness.rho)} matrices, semigroup order {sg.order}"
        )
    for m in witness.rho:
        if len(m) != k or any(len(row) != k for row in m):
            raise DimensionMismatchError(f"expected {k}x{k} matrices")
        for row in m:
            for e in row:
                if not isinstance(e, int) or not 0 <= e < p:
                    raise DimensionMismatchError(f"entry {e!r} not in [0,{p})")
    return p, k


def check_action(sg: FiniteSemigroup, witness: ActionWitness) -> bool:
    """True iff rho[s*t] = rho[s] @ rho[t] for all pairs.

    Recomputed from the matrices directly, independent of the cached
    index tables, so deserialized witnesses get an honest re-check.
    """
    p, k = _validated_rho(sg, witness)
    rho = witness.rho
    t = sg.table
    for s in range(sg.order):
        for u in range(sg.order):
            if _matmul(rho[s], rho[u], p, k) != rho[t[s][u]]:
                return False
    return True


def _rref_basis(vectors, p: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon basis of the span of the given vectors.

    RREF is unique for a given span, so the result is a canonical,
    deterministic representation.
    """

    def pivot(row):
        return next(i for i, x in enumerate(row) if x)

    basis: list[list[int]] = []
    for v in vectors:
        row = list(v)
        for b in basis:
            c = row[pivot(b)]
            if c:
                row = [(x - c * y) % p for x, y in zip(row, b)]
        if any(row):
            inv = pow(row[pivot(row)], p - 2, p)
            basis.append([(x * inv) % p for x in row])
    basis.sort(key=pivot)
    # clear above each pivot, lowest pivot rows last so they stay clean
    for i in range(len(basis) - 1, -1, -1):
        for j in range(i + 1, len(basis)):
            c = basis[i][pivot(basis[j])]
            if c:
                basis[i] = [
                    (x - c * y) % p for x, y in zip(basis[i], basis[j])
                ]
    return tuple(tuple(b) for b in basis)


def acted_span(sg: FiniteSemigroup, witness: ActionWitness) -> tuple:
    """Echelon basis of the span of all images sum_s im(rho[s])."""
    p, k = _validated_rho(sg, witness)
    cols = []
    for m in witness.rho:
        for j in range(k):
            cols.append(tuple(m[i][j] for i in range(k)))
    return _rref_basis(cols, p, k)


def is_simple(sg: FiniteSemigroup, witness: ActionWitness) -> bool:
    """Nonzero acted span and no proper nontrivial invariant subspace."""
    _validated_rho(sg, witness)
    data = _space(witness.space.p, witness.space.k)
    common = -1
    nonzero = False
    for m in witness.rho:
        i = data.index_of(m)
        if i:
            nonzero = True
        common &= data.inv_masks[i]
    return nonzero and common == 0


def annihilator(sg: FiniteSemigroup, witness: ActionWitness) -> int:
    """Mask of elements represented by the zero matrix."""
    _validated_rho(sg, witness)
    k = witness.space.k
    zero = tuple((0,) * k for _ in range(k))
    ann = 0
    for s, m in enumerate(witness.rho):
        if m == zero:
            ann |= 1 << s
    return ann
