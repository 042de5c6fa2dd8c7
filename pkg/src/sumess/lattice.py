"""Submodule lattice enumeration and lattice-theoretic predicates.

The lattice is built by collecting the cyclic submodules of all elements and
saturating under pairwise join; every submodule is a join of cyclics, so the
fixpoint is the complete lattice. Meets are bit intersections. Submodules are
ordered canonically by (cardinality, member tuple) and addressed by their
position in that order (canonical_id).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import Caps, LatticeCapExceeded
from .modules import FiniteModule, Submodule, indices_from_mask


@dataclass(frozen=True)
class StronglyDisjointReport:
    """Two independent verdicts for one pair of submodules.

    lattice_verdict: trivial intersection, and every nonzero submodule of the
    sum meets one of the two.
    element_verdict: no nonzero a in A and b in B share an annihilator.
    The two are provably equivalent; their agreement is asserted by the test
    suite, never assumed by construction.
    """

    a_id: int
    b_id: int
    lattice_verdict: bool
    element_verdict: bool

    @property
    def agree(self) -> bool:
        return self.lattice_verdict == self.element_verdict


class SubmoduleLattice:
    def __init__(self, module: FiniteModule, caps: Caps | None = None):
        self.module = module
        self.caps = caps or module.caps
        self._enumerate()
        self._index_structure()
        self._complement_cache: dict[tuple[int, int], tuple[int, ...]] = {}
        self._class_set_cache: dict[int, frozenset[int]] = {}

    # -- enumeration ---------------------------------------------------------

    def _enumerate(self) -> None:
        mod = self.module
        masks: dict[int, None] = {}
        for x in range(mod.n):
            masks.setdefault(mod.cyclic_mask(x))
        work = list(masks)
        known = list(masks)
        while work:
            new_masks = []
            for a in work:
                for b in known:
                    j = mod.join_masks(a, b)
                    if j not in masks:
                        if len(masks) >= self.caps.max_lattice:
                            raise LatticeCapExceeded(
                                f"lattice exceeds cap {self.caps.max_lattice}"
                            )
                        masks.setdefault(j)
                        new_masks.append(j)
            known.extend(new_masks)
            work = new_masks

        ordered = sorted(
            masks, key=lambda m: (m.bit_count(), tuple(indices_from_mask(m, mod.n)))
        )
        self.subs: list[Submodule] = []
        self.id_of_mask: dict[int, int] = {}
        for i, m in enumerate(ordered):
            s = Submodule(mod, m)
            s.canonical_id = i
            self.subs.append(s)
            self.id_of_mask[m] = i
        self.count = len(self.subs)
        self.zero_id = self.id_of_mask[1]
        self.full_id = self.id_of_mask[(1 << mod.n) - 1]

    def _index_structure(self) -> None:
        mod = self.module
        L = self.count
        join = np.empty((L, L), dtype=np.int32)
        for i in range(L):
            mi = self.subs[i].mask
            join[i, i] = i
            for j in range(i + 1, L):
                mj = self.subs[j].mask
                if mi & mj == mi:
                    jid = j
                elif mi & mj == mj:
                    jid = i
                else:
                    jid = self.id_of_mask[mod.join_masks(mi, mj)]
                join[i, j] = jid
                join[j, i] = jid
        self.join_id = join

        # atoms: minimal nonzero; coatoms: maximal proper
        atoms = []
        for i, s in enumerate(self.subs):
            if s.is_zero:
                continue
            if not any(
                1 < t.size < s.size and t.leq(s) for t in self.subs if not t.is_zero
            ):
                atoms.append(i)
        coatoms = []
        for i, s in enumerate(self.subs):
            if s.is_full:
                continue
            if not any(
                s.size < t.size < mod.n and s.leq(t) for t in self.subs
            ):
                coatoms.append(i)
        self.atoms = tuple(atoms)
        self.coatoms = tuple(coatoms)

        soc = self.zero_id
        for a in atoms:
            soc = int(self.join_id[soc, a])
        self.socle_id = soc

        rad_mask = self.subs[self.full_id].mask
        for c in coatoms:
            rad_mask &= self.subs[c].mask
        self.radical_id = self.id_of_mask[rad_mask]  # meets stay in the lattice

        soc_mask = self.subs[self.socle_id].mask
        self.essential = np.array(
            [s.mask & soc_mask == soc_mask for s in self.subs], dtype=bool
        )

    # -- basic access --------------------------------------------------------

    def sub(self, i: int) -> Submodule:
        return self.subs[i]

    def join(self, i: int, j: int) -> int:
        return int(self.join_id[i, j])

    def meet(self, i: int, j: int) -> int:
        return self.id_of_mask[self.subs[i].mask & self.subs[j].mask]

    def leq(self, i: int, j: int) -> bool:
        return self.subs[i].leq(self.subs[j])

    def nontrivial_ids(self) -> list[int]:
        return [i for i, s in enumerate(self.subs) if not s.is_zero and not s.is_full]

    # -- essentiality --------------------------------------------------------

    def is_essential(self, i: int) -> bool:
        """Fast path: essential iff the submodule contains the socle."""
        return bool(self.essential[i])

    def is_essential_definitional(self, i: int) -> bool:
        """Quantifier form: meets every nonzero submodule nontrivially."""
        mi = self.subs[i].mask
        for s in self.subs:
            if not s.is_zero and (mi & s.mask) == 1:
                return False
        return True

    # -- predicates ----------------------------------------------------------

    def is_semisimple(self) -> bool:
        return self.socle_id == self.full_id

    def atoms_below(self, i: int) -> list[int]:
        mi = self.subs[i].mask
        return [a for a in self.atoms if self.subs[a].mask & mi == self.subs[a].mask]

    def is_uniform(self, i: int) -> bool:
        """Nonzero with exactly one atom below: any two nonzero submodules meet."""
        if self.subs[i].is_zero:
            return False
        return len(self.atoms_below(i)) == 1

    def is_uniform_module(self) -> bool:
        return self.is_uniform(self.full_id)

    def uniform_dimension(self) -> int:
        picked = self._independent_atom_family()
        return len(picked)

    def _independent_atom_family(self) -> list[int]:
        """Greedy maximal family of atoms with pairwise-direct join.

        Choice-independent: the direct join of any maximal family is the
        socle, so the product of the sizes always equals |socle| (asserted).
        """
        picked: list[int] = []
        acc = 1
        for a in self.atoms:
            if self.subs[a].mask & acc == 1:
                picked.append(a)
                acc = self.module.join_masks(acc, self.subs[a].mask)
        sizes = prod(self.subs[a].size for a in picked) if picked else 1
        assert sizes == self.subs[self.socle_id].size, "independent family does not span the socle"
        return picked

    def is_chain(self) -> bool:
        for i in range(self.count):
            for j in range(i + 1, self.count):
                if not self.leq(i, j) and not self.leq(j, i):
                    return False
        return True

    # -- complements ---------------------------------------------------------

    def complements_within(self, i: int, ambient: int) -> tuple[int, ...]:
        """Maximal submodules of `ambient` meeting subs[i] trivially.

        Canonically ordered. The join of subs[i] with each complement is an
        essential submodule of the ambient (asserted).
        """
        key = (i, ambient)
        cached = self._complement_cache.get(key)
        if cached is not None:
            return cached
        mi = self.subs[i].mask
        amb = self.subs[ambient].mask
        disjoint = [
            j
            for j, s in enumerate(self.subs)
            if s.mask & amb == s.mask and s.mask & mi == 1
        ]
        disjoint_set = set(disjoint)
        out = []
        for j in disjoint:
            mj = self.subs[j].mask
            if not any(
                l != j and self.subs[l].mask & mj == mj for l in disjoint_set
            ):
                out.append(j)
        for c in out:
            jid = self.join(i, c)
            assert self._essential_within(jid, ambient), "complement join not essential"
        result = tuple(sorted(out))
        self._complement_cache[key] = result
        return result

    def complements_of(self, i: int) -> tuple[int, ...]:
        return self.complements_within(i, self.full_id)

    def _essential_within(self, i: int, ambient: int) -> bool:
        mi = self.subs[i].mask
        amb = self.subs[ambient].mask
        for s in self.subs:
            if s.is_zero:
                continue
            if s.mask & amb == s.mask and mi & s.mask == 1:
                return False
        return True

    # -- strongly disjoint ----------------------------------------------------

    def _ann_class_set(self, i: int) -> frozenset[int]:
        cached = self._class_set_cache.get(i)
        if cached is None:
            cls = self.module.ann_class_ids()
            cached = frozenset(int(cls[x]) for x in self.subs[i].members if x != 0)
            self._class_set_cache[i] = cached
        return cached

    def element_disjoint(self, i: int, j: int) -> bool:
        """No nonzero element of one has the same annihilator as one of the other."""
        return not (self._ann_class_set(i) & self._ann_class_set(j))

    def strongly_disjoint(self, i: int, j: int) -> StronglyDisjointReport:
        mi = self.subs[i].mask
        mj = self.subs[j].mask
        lattice_ok = mi & mj == 1
        if lattice_ok:
            sum_mask = self.subs[self.join(i, j)].mask
            for s in self.subs:
                if s.is_zero or s.mask & sum_mask != s.mask:
                    continue
                if s.mask & mi == 1 and s.mask & mj == 1:
                    lattice_ok = False
                    break
        return StronglyDisjointReport(i, j, lattice_ok, self.element_disjoint(i, j))

    # -- text dump -------------------------------------------------------------

    def lower_covers(self, i: int) -> list[int]:
        mi = self.subs[i].mask
        below = [j for j, s in enumerate(self.subs) if s.mask & mi == s.mask and j != i]
        covers = []
        for j in below:
            mj = self.subs[j].mask
            if not any(
                l != j and self.subs[l].mask & mj == mj for l in below
            ):
                covers.append(j)
        return sorted(covers)

    def dump_text(self) -> str:
        lines = []
        for i, s in enumerate(self.subs):
            covers = ",".join(str(c) for c in self.lower_covers(i))
            lines.append(f"id={i} size={s.size} gens={s.label} covers=[{covers}]")
        return "\n".join(lines) + "\n"


def enumerate_lattice(module: FiniteModule, caps: Caps | None = None) -> SubmoduleLattice:
    return SubmoduleLattice(module, caps)
