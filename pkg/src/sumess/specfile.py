"""Parser for module description files.

Line-oriented `key = value` format:

    # comment
    name = z8z2
    moduli = 8 2
    action = integers

With a matrix action (one `generator` line per generator, rows separated
by ';'):

    name = m2f2
    moduli = 2 2 2 2
    action = generated
    generator = 1 0 0 0; 0 1 0 0; 0 0 0 0; 0 0 0 0

Blank lines and `#` comments are ignored. Errors carry file:line positions.
"""
from __future__ import annotations

import os
import re

from .errors import SpecFileError
from .modules import (
    GeneratedAction,
    IntegerAction,
    ModulePresentation,
)

_KNOWN_KEYS = {"name", "moduli", "action", "generator"}
_NAME_RE = re.compile(r"^[A-Za-z0-9_.+-]+$")


def _split_ints(text: str, path: str, line_no: int, what: str) -> list[int]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise SpecFileError(path, line_no, f"empty {what}")
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise SpecFileError(path, line_no, f"bad integer {p!r} in {what}") from None
    return out


def parse_spec_text(text: str, path: str = "<string>") -> ModulePresentation:
    name: str | None = None
    moduli: list[int] | None = None
    action_kind: str | None = None
    generators: list[tuple[tuple[tuple[int, ...], ...], int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecFileError(path, line_no, f"expected key = value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in _KNOWN_KEYS:
            raise SpecFileError(path, line_no, f"unknown key {key!r}")
        if key == "name":
            if name is not None:
                raise SpecFileError(path, line_no, "duplicate name")
            if not _NAME_RE.match(value):
                raise SpecFileError(path, line_no, f"bad name {value!r}")
            name = value
        elif key == "moduli":
            if moduli is not None:
                raise SpecFileError(path, line_no, "duplicate moduli")
            moduli = _split_ints(value, path, line_no, "moduli")
            for m in moduli:
                if m < 2:
                    raise SpecFileError(path, line_no, f"modulus {m} must be >= 2")
        elif key == "action":
            if action_kind is not None:
                raise SpecFileError(path, line_no, "duplicate action")
            if value not in ("integers", "generated"):
                raise SpecFileError(
                    path, line_no, f"action must be integers or generated, got {value!r}"
                )
            action_kind = value
        else:  # generator
            rows = [r.strip() for r in value.split(";")]
            matrix = tuple(
                tuple(_split_ints(r, path, line_no, "generator row")) for r in rows
            )
            generators.append((matrix, line_no))

    if moduli is None:
        raise SpecFileError(path, 0, "missing moduli")
    if name is None:
        stem = os.path.splitext(os.path.basename(path))[0]
        name = stem if _NAME_RE.match(stem) else "module"
    if action_kind is None:
        action_kind = "generated" if generators else "integers"

    if action_kind == "integers":
        if generators:
            raise SpecFileError(
                path, generators[0][1], "generator lines require action = generated"
            )
        return ModulePresentation(name, tuple(moduli), IntegerAction())

    if not generators:
        raise SpecFileError(path, 0, "action = generated requires generator lines")
    k = len(moduli)
    for matrix, line_no in generators:
        if len(matrix) != k or any(len(row) != k for row in matrix):
            raise SpecFileError(
                path, line_no, f"generator must be a {k}x{k} matrix"
            )
    return ModulePresentation(
        name, tuple(moduli), GeneratedAction(tuple(m for m, _ in generators))
    )


def load_spec(path: str) -> ModulePresentation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFileError(path, 0, f"cannot read file: {exc.strerror or exc}") from None
    return parse_spec_text(text, path)


def format_spec(pres: ModulePresentation) -> str:
    """Inverse of parse_spec_text, up to comments and whitespace."""
    lines = [f"name = {pres.name}", "moduli = " + " ".join(str(m) for m in pres.moduli)]
    if isinstance(pres.action, GeneratedAction):
        lines.append("action = generated")
        for matrix in pres.action.generators:
            lines.append(
                "generator = " + "; ".join(" ".join(str(v) for v in row) for row in matrix)
            )
    else:
        lines.append("action = integers")
    return "\n".join(lines) + "\n"
