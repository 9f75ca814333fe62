"""Reading and writing the plain-text code definition format.

::

    # comments and blank lines are ignored
    [ring]
    type = extension        # prime | extension | zk
    p = 2
    f = 2
    modulus = 1,1,1         # optional, c0,...,cf
    [code]
    name = hexa             # optional
    n = 2
    gen = 1,1               # repeated, one generator row per line

Instead of ``gen`` rows a ``[code]`` section may list ``word`` rows; those
are taken literally as the codeword set without closing it under the ring
operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .algebra import RingError, RingSpec, extension_field, integer_ring, prime_field
from .codes import ENUMERATION_BOUND, LinearCode, enumerate_codewords

RING_KEYS = {"type", "p", "k", "f", "modulus"}
CODE_KEYS = {"name", "n", "gen", "word"}


class CodeFileError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass
class CodeFile:
    ring: RingSpec
    n: int
    generators: list[tuple[int, ...]] = field(default_factory=list)
    words: Optional[list[tuple[int, ...]]] = None
    name: str = ""

    def to_code(self, bound: int = ENUMERATION_BOUND) -> LinearCode:
        if self.words is not None:
            return LinearCode.from_words(self.ring, self.words, n=self.n, name=self.name)
        return enumerate_codewords(self.generators, self.ring, n=self.n, bound=bound, name=self.name)


def _ints(value: str, line: int) -> list[int]:
    try:
        return [int(t) for t in value.split(",") if t.strip() != ""]
    except ValueError:
        raise CodeFileError(f"expected comma-separated integers, got {value!r}", line) from None


def _int(value: str, key: str, line: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise CodeFileError(f"{key} must be an integer, got {value!r}", line) from None


def parse_code_text(text: str) -> CodeFile:
    section = None
    ring_kv: dict[str, tuple[str, int]] = {}
    code_kv: dict[str, tuple[str, int]] = {}
    rows: dict[str, list[tuple[list[int], int]]] = {"gen": [], "word": []}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if line not in ("[ring]", "[code]"):
                raise CodeFileError(f"unknown section {line}", lineno)
            section = line[1:-1]
            continue
        if "=" not in line:
            raise CodeFileError(f"expected 'key = value', got {line!r}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if section is None:
            raise CodeFileError(f"key {key!r} outside of a section", lineno)
        allowed = RING_KEYS if section == "ring" else CODE_KEYS
        if key not in allowed:
            raise CodeFileError(f"unknown key {key!r} in [{section}]", lineno)
        if key in ("gen", "word"):
            rows[key].append((_ints(value, lineno), lineno))
            continue
        target = ring_kv if section == "ring" else code_kv
        if key in target:
            raise CodeFileError(f"duplicate key {key!r}", lineno)
        target[key] = (value, lineno)

    ring = _build_ring(ring_kv)
    if "n" not in code_kv:
        raise CodeFileError("[code] section must declare n")
    n = _int(code_kv["n"][0], "n", code_kv["n"][1])
    if n < 1:
        raise CodeFileError("n must be positive", code_kv["n"][1])
    if rows["gen"] and rows["word"]:
        raise CodeFileError("use either gen rows or word rows, not both", rows["word"][0][1])

    checked = {}
    for kind in ("gen", "word"):
        out = []
        for i, (row, lineno) in enumerate(rows[kind], start=1):
            if len(row) != n:
                raise CodeFileError(f"{kind} row {i} has length {len(row)}, expected n = {n}", lineno)
            for a in row:
                if not 0 <= a < ring.size:
                    raise CodeFileError(f"{kind} row {i}: entry {a} outside [0, {ring.size})", lineno)
            out.append(tuple(row))
        checked[kind] = out
    name = code_kv["name"][0] if "name" in code_kv else ""
    words = checked["word"] if rows["word"] else None
    return CodeFile(ring, n, checked["gen"], words, name)


def _build_ring(kv: dict[str, tuple[str, int]]) -> RingSpec:
    if "type" not in kv:
        raise CodeFileError("[ring] section must declare type")
    kind, line = kv["type"]

    def need(key):
        if key not in kv:
            raise CodeFileError(f"ring type {kind} needs {key}", line)
        return _int(kv[key][0], key, kv[key][1])

    try:
        if kind == "prime":
            return prime_field(need("p"))
        if kind == "zk":
            return integer_ring(need("k"))
        if kind == "extension":
            modulus = None
            if "modulus" in kv:
                modulus = _ints(*kv["modulus"])
            return extension_field(need("p"), need("f"), modulus)
    except RingError as exc:
        raise CodeFileError(str(exc), line) from None
    raise CodeFileError(f"unknown ring type {kind!r}", line)


def parse_code_file(path: Union[str, Path]) -> CodeFile:
    return parse_code_text(Path(path).read_text())


def render_ring(ring: RingSpec) -> list[str]:
    lines = ["[ring]", f"type = {ring.kind}"]
    if ring.kind == "zk":
        lines.append(f"k = {ring.k}")
    else:
        lines.append(f"p = {ring.p}")
    if ring.kind == "extension":
        lines.append(f"f = {ring.f}")
        lines.append("modulus = " + ",".join(map(str, ring.modulus)))
    return lines


def render_code_file(code: LinearCode) -> str:
    """Code file listing every codeword as a ``word`` row."""
    lines = render_ring(code.ring) + ["[code]"]
    if code.name:
        lines.append(f"name = {code.name}")
    lines.append(f"n = {code.n}")
    lines.extend("word = " + ",".join(map(str, w)) for w in code.codewords)
    return "\n".join(lines) + "\n"
