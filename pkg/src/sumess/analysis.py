"""Per-module analysis bundle: module, lattice, graphs, derived caches.

Checkers and the CLI go through this object so the lattice and both graphs
are built once per module and shared.
"""
from __future__ import annotations

import json

from .errors import Caps
from .graphs import EssGraph, proper_sum_essential_graph, sum_essential_graph
from .lattice import SubmoduleLattice
from .modules import FiniteModule, ModulePresentation, count_homs, is_isomorphic


class ModuleAnalysis:
    def __init__(self, source: ModulePresentation | FiniteModule, caps: Caps | None = None):
        if isinstance(source, FiniteModule):
            self.module = source
        else:
            self.module = FiniteModule(source, caps)
        self._lattice: SubmoduleLattice | None = None
        self._s: EssGraph | None = None
        self._n: EssGraph | None = None
        self._iso_cache: dict[tuple[int, int], bool] = {}
        self._hom_cache: dict[tuple[int, int], int] = {}
        self._atom_classes: list[list[int]] | None = None

    @property
    def lattice(self) -> SubmoduleLattice:
        if self._lattice is None:
            self._lattice = SubmoduleLattice(self.module)
        return self._lattice

    @property
    def s_graph(self) -> EssGraph:
        if self._s is None:
            self._s = sum_essential_graph(self.lattice)
        return self._s

    @property
    def n_graph(self) -> EssGraph:
        if self._n is None:
            self._n = proper_sum_essential_graph(self.lattice)
        return self._n

    @property
    def is_simple_module(self) -> bool:
        return self.lattice.count == 2

    def iso(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        key = (a, b)
        got = self._iso_cache.get(key)
        if got is None:
            got = is_isomorphic(self.lattice.subs[a], self.lattice.subs[b])
            self._iso_cache[key] = got
        return got

    def homs(self, a: int, b: int) -> int:
        key = (a, b)
        got = self._hom_cache.get(key)
        if got is None:
            got = count_homs(self.lattice.subs[a], self.lattice.subs[b])
            self._hom_cache[key] = got
        return got

    def sub_is_semisimple(self, i: int) -> bool:
        """A submodule equals the join of the atoms below it iff semisimple."""
        lat = self.lattice
        acc = lat.zero_id
        for a in lat.atoms_below(i):
            acc = lat.join(acc, a)
        return acc == i

    def atom_iso_classes(self) -> list[list[int]]:
        """Atoms grouped by isomorphism, each class in canonical order."""
        if self._atom_classes is None:
            classes: list[list[int]] = []
            for a in self.lattice.atoms:
                for cls in classes:
                    if self.iso(cls[0], a):
                        cls.append(a)
                        break
                else:
                    classes.append([a])
            self._atom_classes = classes
        return self._atom_classes

    def has_isomorphic_twin(self, i: int) -> bool:
        """True iff some other submodule of M is isomorphic to subs[i]."""
        lat = self.lattice
        size = lat.subs[i].size
        for j, s in enumerate(lat.subs):
            if j != i and s.size == size and self.iso(i, j):
                return True
        return False

    def report_dict(self) -> dict:
        """Full JSON-ready analysis report; field order fixed."""
        mod = self.module
        lat = self.lattice
        return {
            "module": {
                "name": mod.presentation.name,
                "moduli": list(mod.moduli),
                "action": mod.presentation.action.kind,
                "order": mod.n,
                "action_ring_size": mod.endo_count,
            },
            "lattice": {
                "submodule_count": lat.count,
                "atoms": list(lat.atoms),
                "coatoms": list(lat.coatoms),
                "socle": lat.socle_id,
                "radical": lat.radical_id,
                "essential_ids": [i for i in range(lat.count) if lat.is_essential(i)],
                "is_semisimple": lat.is_semisimple(),
                "is_uniform": lat.is_uniform_module(),
                "uniform_dimension": lat.uniform_dimension(),
                "is_chain": lat.is_chain(),
                "labels": {str(i): lat.subs[i].label for i in range(lat.count)},
            },
            "graphs": {
                "s": self.s_graph.report().as_dict(),
                "n": self.n_graph.report().as_dict(),
            },
        }

    def report_json(self) -> str:
        return json.dumps(self.report_dict(), indent=2) + "\n"


def analyze(source: ModulePresentation | FiniteModule, caps: Caps | None = None) -> ModuleAnalysis:
    return ModuleAnalysis(source, caps)
