"""The on-disk group format.

UTF-8 text: first ``name: <string>``, then ``degree: <n>``, then one
generator per nonempty line in cycle notation; ``#`` starts a comment.
Serialization is canonical (cycles sorted by least point, single spaces),
so parse -> serialize round-trips bit-exactly on canonical files.
"""

from __future__ import annotations

import os

from .errors import CycleParseError, GroupFileError
from .group import PermGroup
from .perm import parse_permutation


def parse_group_text(text: str, source: str = "<text>") -> PermGroup:
    name = None
    degree = None
    generators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            if name is not None:
                raise GroupFileError("duplicate 'name:' line", lineno)
            if degree is not None:
                raise GroupFileError("'name:' must come before 'degree:'", lineno)
            name = line[len("name:"):].strip()
            continue
        if line.startswith("degree:"):
            if degree is not None:
                raise GroupFileError("duplicate 'degree:' line", lineno)
            if name is None:
                raise GroupFileError("'degree:' must come after 'name:'", lineno)
            try:
                degree = int(line[len("degree:"):].strip())
            except ValueError:
                raise GroupFileError("degree is not an integer", lineno)
            if degree < 1:
                raise GroupFileError("degree must be positive", lineno)
            continue
        if name is None or degree is None:
            raise GroupFileError(
                "generators must follow the 'name:' and 'degree:' lines", lineno)
        try:
            generators.append(parse_permutation(line, degree))
        except CycleParseError as exc:
            raise GroupFileError(f"bad generator: {exc}", lineno) from exc
    if name is None:
        raise GroupFileError("missing 'name:' line", 1)
    if degree is None:
        raise GroupFileError("missing 'degree:' line", 1)
    return PermGroup(degree, generators, name=name)


def parse_group_file(path: str) -> PermGroup:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_group_text(text, source=os.fspath(path))


def serialize_group(G: PermGroup) -> str:
    lines = [f"name: {G.name or 'unnamed'}", f"degree: {G.degree}"]
    lines.extend(g.cycle_string() for g in G.generators)
    return "\n".join(lines) + "\n"


def write_group_file(G: PermGroup, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_group(G))
