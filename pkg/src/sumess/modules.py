"""Finite modules over a concrete action ring.

A module is presented as a finite abelian group Z_{d1} + ... + Z_{dk}
(mixed-radix coordinates) together with an action: either the integers
acting by scalars, or a generated action given by k-by-k integer matrices.
The action ring is materialized as the set of endomorphism function tables
closed under pointwise addition and composition; it always contains the
identity and the zero map.

Elements are addressed by a dense index: index = sum(c_i * stride_i) with
stride_0 = 1 and stride_i = stride_{i-1} * d_{i-1}, so the first coordinate
varies fastest. Submodules are bit-vectors over element indices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm, prod

import numpy as np

from .errors import (
    ActionRingCapExceeded,
    Caps,
    ElementCapExceeded,
    HomSearchCapExceeded,
    IllFormedGenerator,
    InvalidModuli,
)


@dataclass(frozen=True)
class IntegerAction:
    """Scalar action of the integers; the ring image is Z/exponent."""

    kind: str = field(default="integers", init=False)


@dataclass(frozen=True)
class GeneratedAction:
    """Action generated by integer matrices acting on coordinate columns.

    Matrix G sends the element with coordinates x to the element with
    coordinates y_i = sum_j G[i][j] * x_j mod d_i. G is well formed iff
    d_i divides G[i][j] * d_j for all i, j (the image of a generator of
    order d_j must have order dividing d_j); anything else raises
    IllFormedGenerator.
    """

    generators: tuple[tuple[tuple[int, ...], ...], ...]
    kind: str = field(default="generated", init=False)


@dataclass(frozen=True)
class ModulePresentation:
    name: str
    moduli: tuple[int, ...]
    action: IntegerAction | GeneratedAction


@dataclass(frozen=True)
class Element:
    coords: tuple[int, ...]
    index: int


def integer_module(name: str, *moduli: int) -> ModulePresentation:
    return ModulePresentation(name, tuple(moduli), IntegerAction())


def generated_module(name: str, moduli, matrices) -> ModulePresentation:
    gens = tuple(tuple(tuple(int(v) for v in row) for row in g) for g in matrices)
    return ModulePresentation(name, tuple(moduli), GeneratedAction(gens))


def _mask_from_bits(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def mask_from_indices(indices, n: int) -> int:
    bits = np.zeros(n, dtype=np.uint8)
    bits[np.asarray(indices, dtype=np.int64)] = 1
    return _mask_from_bits(bits)


def indices_from_mask(mask: int, n: int) -> np.ndarray:
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]
    return np.nonzero(bits)[0].astype(np.int32)


class Submodule:
    """A submodule as a bit-vector of element indices.

    canonical_id is assigned by the lattice (position in the order sorted by
    (cardinality, member tuple)); it is None for ad-hoc submodules that have
    not been registered in a lattice yet.
    """

    __slots__ = ("module", "mask", "members", "size", "canonical_id", "_gens")

    def __init__(self, module: "FiniteModule", mask: int):
        self.module = module
        self.mask = mask
        self.members = indices_from_mask(mask, module.n)
        self.size = int(self.members.size)
        self.canonical_id = None
        self._gens = None

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.module is other.module and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.module), self.mask))

    def __repr__(self):
        return f"Submodule({self.label}, size={self.size})"

    def contains(self, index: int) -> bool:
        return bool((self.mask >> index) & 1)

    def leq(self, other: "Submodule") -> bool:
        return self.mask & other.mask == self.mask

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    @property
    def is_full(self) -> bool:
        return self.size == self.module.n

    @property
    def gens(self) -> tuple[int, ...]:
        """Irredundant generating set, greedy over ascending element index."""
        if self._gens is None:
            self._gens = self.module._compute_gens(self)
        return self._gens

    @property
    def label(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_full:
            return "M"
        parts = []
        for g in self.gens:
            coords = self.module.decode(g)
            parts.append("(" + ",".join(str(c) for c in coords) + ")")
        return "<" + ",".join(parts) + ">"


class FiniteModule:
    """Concrete finite module: arithmetic tables plus the action ring."""

    def __init__(self, presentation: ModulePresentation, caps: Caps | None = None):
        self.caps = caps or Caps()
        self.presentation = presentation
        moduli = presentation.moduli
        if len(moduli) == 0:
            raise InvalidModuli("moduli list must be nonempty")
        for d in moduli:
            if not isinstance(d, int) or d < 2:
                raise InvalidModuli(f"modulus {d!r} is not an integer >= 2")
        self.moduli = tuple(moduli)
        self.k = len(moduli)
        n = prod(moduli)
        if n > self.caps.max_elements:
            raise ElementCapExceeded(f"module has {n} elements, cap is {self.caps.max_elements}")
        self.n = n
        self.exponent = lcm(*moduli)

        strides = [1] * self.k
        for i in range(1, self.k):
            strides[i] = strides[i - 1] * moduli[i - 1]
        self._strides = np.array(strides, dtype=np.int64)
        self._mod_arr = np.array(moduli, dtype=np.int64)

        idxs = np.arange(n, dtype=np.int64)
        coords = np.empty((n, self.k), dtype=np.int64)
        for j in range(self.k):
            coords[:, j] = (idxs // strides[j]) % moduli[j]
        self._coords = coords

        s = (coords[:, None, :] + coords[None, :, :]) % self._mod_arr
        self.add = (s @ self._strides).astype(np.int32)
        self.neg = (((-coords) % self._mod_arr) @ self._strides).astype(np.int32)

        self.endos = self._build_action_ring(presentation.action)
        self.endo_count = self.endos.shape[0]
        zero_key = np.zeros(n, dtype=np.int32).tobytes()
        ident_key = np.arange(n, dtype=np.int32).tobytes()
        keys = {self.endos[i].tobytes(): i for i in range(self.endo_count)}
        self.zero_endo = keys[zero_key]
        self.identity_endo = keys[ident_key]

        self._cyclic_mask_cache: dict[int, int] = {}
        self._ann_mask_cache: dict[int, int] = {}
        self._ann_class_cache = None

    # -- construction ------------------------------------------------------

    def _scalar_table(self, s: int) -> np.ndarray:
        return (((self._coords * s) % self._mod_arr) @ self._strides).astype(np.int32)

    def _matrix_table(self, g) -> np.ndarray:
        mat = np.asarray(g, dtype=np.int64)
        if mat.shape != (self.k, self.k):
            raise IllFormedGenerator(f"generator must be a {self.k}x{self.k} matrix, got shape {mat.shape}")
        for i in range(self.k):
            for j in range(self.k):
                if (mat[i, j] * self.moduli[j]) % self.moduli[i] != 0:
                    raise IllFormedGenerator(
                        f"entry [{i}][{j}]={int(mat[i, j])}: {self.moduli[i]} does not divide "
                        f"{int(mat[i, j])}*{self.moduli[j]}, map is not additive"
                    )
        img = (self._coords @ mat.T) % self._mod_arr
        table = (img @ self._strides).astype(np.int32)
        self._assert_additive(table)
        return table

    def _assert_additive(self, table: np.ndarray) -> None:
        # exhaustive additivity check: e(x+y) == e(x)+e(y) for all pairs
        lhs = table[self.add]
        rhs = self.add[table[:, None], table[None, :]]
        if not np.array_equal(lhs, rhs):
            raise IllFormedGenerator("generator table is not additive")

    def _build_action_ring(self, action) -> np.ndarray:
        n = self.n
        if isinstance(action, IntegerAction):
            # scalars 0..exponent-1, all distinct
            tables = [self._scalar_table(s) for s in range(self.exponent)]
            if len(tables) > self.caps.max_action_ring:
                raise ActionRingCapExceeded(
                    f"action ring has {len(tables)} endomorphisms, cap is {self.caps.max_action_ring}"
                )
            return np.stack(tables)

        ident = np.arange(n, dtype=np.int32)
        zero = np.zeros(n, dtype=np.int32)
        tables: list[np.ndarray] = []
        seen: dict[bytes, int] = {}

        def push(t: np.ndarray) -> bool:
            key = t.tobytes()
            if key in seen:
                return False
            if len(tables) >= self.caps.max_action_ring:
                raise ActionRingCapExceeded(
                    f"action ring closure exceeds cap {self.caps.max_action_ring}"
                )
            seen[key] = len(tables)
            tables.append(t)
            return True

        push(ident)
        push(zero)
        for g in action.generators:
            push(self._matrix_table(g))

        # closure under composition and pointwise addition; additivity is
        # preserved by both, so only the seed tables need the exhaustive check
        frontier = list(range(len(tables)))
        while frontier:
            new: list[int] = []
            for a in frontier:
                ta = tables[a]
                for b in range(len(tables)):
                    tb = tables[b]
                    for t in (ta[tb], tb[ta], self.add[ta, tb]):
                        if push(t):
                            new.append(len(tables) - 1)
            frontier = new
        return np.stack(tables)

    # -- elements ----------------------------------------------------------

    def encode(self, coords) -> int:
        cs = tuple(int(c) % d for c, d in zip(coords, self.moduli))
        if len(cs) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(coords)}")
        return int(sum(c * s for c, s in zip(cs, self._strides)))

    def decode(self, index: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self._coords[index])

    def element(self, coords) -> Element:
        idx = self.encode(coords)
        return Element(self.decode(idx), idx)

    def element_at(self, index: int) -> Element:
        if not 0 <= index < self.n:
            raise ValueError(f"element index {index} out of range [0,{self.n})")
        return Element(self.decode(index), index)

    def _as_index(self, m) -> int:
        if isinstance(m, Element):
            return m.index
        return int(m)

    # -- annihilators ------------------------------------------------------

    def ann_mask(self, m) -> int:
        """Bitmask over endo ids e with e(m) = 0."""
        idx = self._as_index(m)
        cached = self._ann_mask_cache.get(idx)
        if cached is None:
            bits = (self.endos[:, idx] == 0).astype(np.uint8)
            cached = _mask_from_bits(bits)
            self._ann_mask_cache[idx] = cached
        return cached

    def annihilator(self, m) -> frozenset[int]:
        idx = self._as_index(m)
        return frozenset(int(e) for e in np.nonzero(self.endos[:, idx] == 0)[0])

    def ann_class_ids(self) -> np.ndarray:
        """Array mapping element index -> annihilator-class id."""
        if self._ann_class_cache is None:
            classes: dict[int, int] = {}
            out = np.empty(self.n, dtype=np.int32)
            for x in range(self.n):
                key = self.ann_mask(x)
                out[x] = classes.setdefault(key, len(classes))
            self._ann_class_cache = out
        return self._ann_class_cache

    # -- submodules --------------------------------------------------------

    def submodule_from_mask(self, mask: int) -> Submodule:
        return Submodule(self, mask)

    def zero_submodule(self) -> Submodule:
        return Submodule(self, 1)

    def full_submodule(self) -> Submodule:
        return Submodule(self, (1 << self.n) - 1)

    def cyclic_mask(self, index: int) -> int:
        cached = self._cyclic_mask_cache.get(index)
        if cached is None:
            orbit = np.unique(self.endos[:, index])
            bits = np.zeros(self.n, dtype=np.uint8)
            bits[orbit] = 1
            # the endo orbit of m is already a submodule because the action
            # ring is closed under + and o; verify closure anyway
            assert bits[self.add[np.ix_(orbit, orbit)]].all(), "orbit not closed under +"
            assert bits[self.endos[:, orbit]].all(), "orbit not closed under action"
            cached = _mask_from_bits(bits)
            self._cyclic_mask_cache[index] = cached
        return cached

    def cyclic_submodule(self, m) -> Submodule:
        return Submodule(self, self.cyclic_mask(self._as_index(m)))

    def join_masks(self, mask_a: int, mask_b: int) -> int:
        """Sum of two submodules, as a mask (one-shot: {a+b} is closed)."""
        if mask_a == mask_b:
            return mask_a
        ia = indices_from_mask(mask_a, self.n)
        ib = indices_from_mask(mask_b, self.n)
        out = self.add[np.ix_(ia, ib)]
        bits = np.zeros(self.n, dtype=np.uint8)
        bits[out.ravel()] = 1
        return _mask_from_bits(bits)

    def span_mask(self, indices) -> int:
        mask = 1
        for x in indices:
            mask = self.join_masks(mask, self.cyclic_mask(int(x)))
        return mask

    def _compute_gens(self, sub: Submodule) -> tuple[int, ...]:
        if sub.size == 1:
            return ()
        gens: list[int] = []
        span = 1
        for x in sub.members:
            x = int(x)
            if not (span >> x) & 1:
                gens.append(x)
                span = self.join_masks(span, self.cyclic_mask(x))
        changed = True
        while changed and len(gens) > 1:
            changed = False
            for g in gens:
                rest = [h for h in gens if h != g]
                if self.span_mask(rest) == sub.mask:
                    gens = rest
                    changed = True
                    break
        return tuple(gens)


def build_module(presentation: ModulePresentation, caps: Caps | None = None) -> FiniteModule:
    return FiniteModule(presentation, caps)


# -- homomorphisms ----------------------------------------------------------


def _propagate(module: FiniteModule, gens, images) -> list[int] | None:
    """Close gen images under sums and endo images; None on conflict.

    The returned table is defined (≠ -1) exactly on the submodule generated
    by `gens`; entries elsewhere stay -1.
    """
    f = [-1] * module.n
    f[0] = 0
    queue = [0]

    def assign(x: int, v: int) -> bool:
        if f[x] == -1:
            f[x] = v
            queue.append(x)
            return True
        return f[x] == v

    for g, img in zip(gens, images):
        if not assign(g, img):
            return None
    add = module.add
    endos = module.endos
    r = module.endo_count
    decided: list[int] = []
    pos = 0
    while pos < len(queue):
        x = queue[pos]
        pos += 1
        decided.append(x)
        fx = f[x]
        for y in decided:
            if not assign(int(add[x, y]), int(add[fx, f[y]])):
                return None
        for e in range(r):
            if not assign(int(endos[e, x]), int(endos[e, fx])):
                return None
    return f


def _extend_hom(module: FiniteModule, dom: Submodule, gens, images) -> list[int] | None:
    """Extend gen images to a map total on dom, or None if inconsistent."""
    f = _propagate(module, gens, images)
    if f is None or any(f[int(x)] == -1 for x in dom.members):
        return None
    return f


def count_homs(dom: Submodule, cod: Submodule) -> int:
    """Number of additive maps dom -> cod commuting with every action endo.

    Brute force over assignments of images to dom's generating set, each
    candidate verified by extension.
    """
    module = dom.module
    if cod.module is not module:
        raise ValueError("count_homs requires submodules of the same module")
    gens = dom.gens
    t = len(gens)
    total = cod.size**t
    if total > module.caps.max_hom_search:
        raise HomSearchCapExceeded(
            f"hom search space {cod.size}^{t} = {total} exceeds cap {module.caps.max_hom_search}"
        )
    members = [int(x) for x in cod.members]
    count = 0
    for images in itertools.product(members, repeat=t):
        if _extend_hom(module, dom, gens, images) is not None:
            count += 1
    return count


def is_isomorphic(a: Submodule, b: Submodule) -> bool:
    """True iff there is a bijective module homomorphism a -> b.

    Backtracking over generator images, one generator at a time. Candidate
    images are restricted to b-elements with the same annihilator as the
    generator (an isomorphism preserves annihilators exactly), and each
    partial assignment is propagated and pruned on injectivity before the
    next generator is tried.
    """
    module = a.module
    if b.module is not module:
        raise ValueError("is_isomorphic requires submodules of the same module")
    if a.mask == b.mask:
        return True
    if a.size != b.size:
        return False
    cls = module.ann_class_ids()
    if sorted(int(cls[x]) for x in a.members) != sorted(int(cls[x]) for x in b.members):
        # annihilator multisets are isomorphism invariants
        return False
    gens = a.gens
    t = len(gens)
    candidates = [
        [int(x) for x in b.members if cls[x] == cls[g]] for g in gens
    ]
    budget = module.caps.max_hom_search
    nodes = 0
    a_members = [int(x) for x in a.members]

    def injective_so_far(f: list[int]) -> bool:
        seen = set()
        for x in a_members:
            v = f[x]
            if v == -1:
                continue
            if v in seen:
                return False
            seen.add(v)
        return True

    def search(depth: int, images: list[int]) -> bool:
        nonlocal nodes
        if depth == t:
            f = _propagate(module, gens, images)
            if f is None or any(f[x] == -1 for x in a_members):
                return False
            return injective_so_far(f)
        for img in candidates[depth]:
            nodes += 1
            if nodes > budget:
                raise HomSearchCapExceeded(
                    f"iso search exceeded cap {budget} for |{a.size}| pair"
                )
            f = _propagate(module, gens[: depth + 1], images + [img])
            if f is None or not injective_so_far(f):
                continue
            if search(depth + 1, images + [img]):
                return True
        return False

    return search(0, [])
