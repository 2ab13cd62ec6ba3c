"""Actions on small finite abelian groups, independent of the matrix engine.

This exists to validate the restriction of the module catalog to prime
fields: on Z/4 the subgroup {0, 2} is invariant under every
endomorphism, so no action on Z/4 is ever simple, while Z/2 x Z/2 does
admit simple actions.  Everything here is brute force and only meant
for groups of order <= 16 acting under semigroups of order <= 3 or so.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .core import FiniteSemigroup
from .errors import BoundExceededError

# cap on |End(M)| ** |S| for the brute-force action scan
BRUTE_LIMIT = 200_000


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum of cyclic groups Z/d for d in factors; elements are tuples."""

    factors: tuple[int, ...]

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(d) for d in self.factors)))

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, c: int, a):
        return tuple((c * x) % d for x, d in zip(a, self.factors))

    @cached_property
    def endomorphisms(self) -> list[tuple[int, ...]]:
        """Each endo as a tuple mapping element index to element index.

        An endo is fixed by generator images f(e_i) constrained by
        d_i * f(e_i) = 0; values extend additively.
        """
        r = len(self.factors)
        choices = []
        for i, d in enumerate(self.factors):
            imgs = [x for x in self.elements if not any(self.scale(d, x))]
            choices.append(imgs)
        endos = []
        for images in itertools.product(*choices):
            table = []
            for e in self.elements:
                acc = (0,) * r
                for c, img in zip(e, images):
                    acc = self.add(acc, self.scale(c, img))
                table.append(self.index[acc])
            endos.append(tuple(table))
        return endos

    @cached_property
    def subgroups(self) -> list[frozenset]:
        """All subgroups, as frozensets of element indices."""
        n = len(self.elements)
        zero = self.index[(0,) * len(self.factors)]
        subs = []
        for bits in range(1 << n):
            if not (bits >> zero) & 1:
                continue
            members = [i for i in range(n) if (bits >> i) & 1]
            closed = all(
                (
                    bits
                    >> self.index[
                        self.add(self.elements[a], self.elements[b])
                    ]
                )
                & 1
                for a in members
                for b in members
            )
            if closed:
                subs.append(frozenset(members))
        return subs


def enumerate_abelian_actions(sg: FiniteSemigroup, group: AbelianGroup) -> list:
    """All multiplicative actions, each a tuple of endo indices by element.

    Brute force over |End|^|S| candidates; refuses anything large.
    """
    endos = group.endomorphisms
    ne = len(endos)
    total = ne**sg.order
    if total > BRUTE_LIMIT:
        raise BoundExceededError(
            f"{total} candidate actions exceeds the brute-force limit"
        )
    t = sg.table
    n = sg.order
    # rho[s*t](m) = rho[s](rho[t](m)): apply the right factor first
    pairs = [(u, v, t[u][v]) for u in range(n) for v in range(n)]
    out = []
    for cand in itertools.product(range(ne), repeat=n):
        for u, v, w in pairs:
            fu, fv, fw = endos[cand[u]], endos[cand[v]], endos[cand[w]]
            if any(fu[fv[i]] != fw[i] for i in range(len(fu))):
                break
        else:
            out.append(cand)
    return out


def abelian_invariant_subgroups(group: AbelianGroup, action) -> list[frozenset]:
    """Subgroups mapped into themselves by every endo of the action."""
    endos = group.endomorphisms
    used = [endos[i] for i in action]
    return [
        h
        for h in group.subgroups
        if all(all(f[m] in h for m in h) for f in used)
    ]


def abelian_action_is_simple(group: AbelianGroup, action) -> bool:
    """Nonzero image somewhere and no invariant subgroup strictly between."""
    endos = group.endomorphisms
    zero = group.index[(0,) * len(group.factors)]
    used = [endos[i] for i in action]
    if all(all(f[m] == zero for m in range(len(f))) for f in used):
        return False
    n = len(group.elements)
    for h in abelian_invariant_subgroups(group, action):
        if 1 < len(h) < n:
            return False
    return True
