"""Corpus enumeration and batch checker runs.

The default corpus is every finite abelian group of order at most 36 (one
representative per isomorphism class, by prime-power partitions), the
elementary abelian 2-groups up to 2^5, and one matrix-action module: the
2x2 matrix ring over the field with two elements acting on itself from the
left. Items run through the checker catalog and land in a CSV summary.
"""
from __future__ import annotations

import csv
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import ModuleAnalysis
from .errors import CapExceeded, Caps, UnknownTheoremId
from .graphs import export_dot
from .modules import ModulePresentation, generated_module, integer_module
from .theorems import CATALOG_ALL, CORPUS_GATES, REGISTRY, run_catalog


@dataclass(frozen=True)
class CorpusSpec:
    max_order: int = 36
    include_elementary_abelian_up_to: int = 32
    extra_spec_files: tuple[str, ...] = ()
    theorem_ids: object = "all"


@dataclass(frozen=True)
class CorpusRow:
    module: str
    order: int
    theorem_id: str
    applicable: bool
    passed: bool
    witness: str


@dataclass
class CorpusResult:
    rows: list[CorpusRow] = field(default_factory=list)
    dot_files: dict[str, str] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)

    @property
    def any_failed(self) -> bool:
        return any(r.applicable and not r.passed for r in self.rows)


def _factor(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _partitions(n: int, largest: int | None = None):
    """Partitions of n into nonincreasing parts, largest-part-first order."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for k in range(top, 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_presentations(max_order: int) -> list[ModulePresentation]:
    """One integer module per isomorphism class of abelian group, orders
    4..max_order ascending. Prime orders are skipped: those modules are
    simple and have no graph vertices."""
    out = []
    for n in range(4, max_order + 1):
        fac = _factor(n)
        if len(fac) == 1 and fac[0][1] == 1:
            continue
        per_prime = [
            [tuple(p**k for k in part) for part in _partitions(e)] for p, e in fac
        ]
        for combo in itertools.product(*per_prime):
            moduli = tuple(m for part in combo for m in part)
            name = "".join(f"z{m}" for m in moduli)
            out.append(integer_module(name, *moduli))
    return out


def matrix_ring_presentation() -> ModulePresentation:
    """M2(F2) acting on itself by left multiplication, one generator per
    matrix unit. Basis order: e11, e12, e21, e22."""

    def idx(r: int, c: int) -> int:
        return (r - 1) * 2 + (c - 1)

    mats = []
    for a in (1, 2):
        for b in (1, 2):
            g = [[0] * 4 for _ in range(4)]
            for c in (1, 2):
                for d in (1, 2):
                    if b == c:
                        g[idx(a, d)][idx(c, d)] = 1
            mats.append(g)
    return generated_module("m2f2", (2, 2, 2, 2), mats)


def enumerate_corpus(cspec: CorpusSpec) -> list[ModulePresentation]:
    items = abelian_presentations(cspec.max_order)
    seen = {p.moduli for p in items}
    k = 2
    while 2**k <= cspec.include_elementary_abelian_up_to:
        moduli = (2,) * k
        if moduli not in seen:
            items.append(integer_module("".join("z2" for _ in moduli), *moduli))
            seen.add(moduli)
        k += 1
    if cspec.max_order >= 16:
        items.append(matrix_ring_presentation())
    if cspec.extra_spec_files:
        from .specfile import load_spec

        for path in cspec.extra_spec_files:
            items.append(load_spec(path))
    return items


def _selected_ids(theorem_ids) -> tuple[str, ...]:
    if theorem_ids == "all":
        base = list(CATALOG_ALL)
    elif isinstance(theorem_ids, str):
        base = [theorem_ids]
    else:
        base = list(theorem_ids)
    for tid in base:
        if tid not in REGISTRY:
            raise UnknownTheoremId(f"unknown theorem id {tid!r}")
    for gate in CORPUS_GATES:
        if gate not in base:
            base.append(gate)
    return tuple(base)


def _run_item(args):
    pres, ids, caps, want_dots = args
    order = 1
    for m in pres.moduli:
        order *= m
    try:
        az = ModuleAnalysis(pres, caps=caps)
        verdicts = run_catalog(az, ids)
    except CapExceeded as exc:
        row = CorpusRow(pres.name, order, "cap-exceeded", False, True, str(exc))
        return [row], {}, True
    rows = [
        CorpusRow(pres.name, order, v.theorem_id, v.applicable, v.passed, v.witness or "")
        for v in verdicts
    ]
    dots = {}
    if want_dots:
        dots[f"{pres.name}_s.dot"] = export_dot(az.s_graph, f"{pres.name}_s")
        dots[f"{pres.name}_n.dot"] = export_dot(az.n_graph, f"{pres.name}_n")
    return rows, dots, False


def run_corpus(
    cspec: CorpusSpec,
    caps: Caps | None = None,
    jobs: int = 1,
    dot_dir: str | None = None,
) -> CorpusResult:
    """Run the catalog over the corpus; results in enumeration order."""
    caps = caps or Caps()
    ids = _selected_ids(cspec.theorem_ids)
    items = enumerate_corpus(cspec)
    tasks = [(pres, ids, caps, dot_dir is not None) for pres in items]

    result = CorpusResult()
    if jobs <= 1:
        outcomes = map(_run_item, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        outcomes = pool.map(_run_item, tasks)
    for pres, (rows, dots, capped) in zip(items, outcomes):
        result.rows.extend(rows)
        result.dot_files.update(dots)
        if capped:
            result.skipped.append(pres.name)
    if jobs > 1:
        pool.shutdown()

    if dot_dir is not None:
        os.makedirs(dot_dir, exist_ok=True)
        for fname, text in result.dot_files.items():
            with open(os.path.join(dot_dir, fname), "w") as fh:
                fh.write(text)
    return result


def write_csv(rows: list[CorpusRow], path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["module", "order", "theorem_id", "applicable", "pass", "witness"])
        for r in rows:
            w.writerow(
                [
                    r.module,
                    r.order,
                    r.theorem_id,
                    "true" if r.applicable else "false",
                    "true" if r.passed else "false",
                    r.witness,
                ]
            )
