"""Plain-text semiring table files.

::

    # comments start with '#'
    format semisym-table 1
    name n2eq4
    order 4
    elements [0] [1] [2] [3]
    zero [0]
    one [1]
    add
    [0] [1] [2] [3]
    ...            (m rows of m tokens)
    mul
    ...            (m rows of m tokens)

A file may instead name a built-in construction with ``builtin <id>``
(e.g. ``builtin natural`` or ``builtin sat 3``) after the format line.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .constructions import builtin
from .semiring import FiniteSemiring, Semiring, find_axiom_violation

FORMAT = "semisym-table"
VERSION = "1"


class TableFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None,
                 path: str | None = None):
        self.line = line
        self.col = col
        self.path = path
        where = path or "<table>"
        if line is not None:
            where += f":{line}"
            if col is not None:
                where += f":{col}"
        super().__init__(f"{where}: {message}")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield no, raw, body


def _cols(raw: str, body: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    for tok in body.split():
        pos = raw.index(tok, pos)
        out.append((tok, pos + 1))
        pos += len(tok)
    return out


def loads(text: str, path: str | None = None) -> Semiring:
    def err(msg, line=None, col=None):
        return TableFileError(msg, line, col, path)

    lines = list(_lines(text))
    if not lines:
        raise err("empty file")
    it = iter(lines)
    no, raw, body = next(it)
    words = body.split()
    if len(words) != 3 or words[0] != "format" or words[1] != FORMAT:
        raise err(f"expected 'format {FORMAT} {VERSION}'", no, 1)
    if words[2] != VERSION:
        raise err(f"unsupported format version {words[2]}", no, raw.index(words[2]) + 1)

    header: dict[str, tuple[int, str, list[tuple[str, int]]]] = {}
    blocks: dict[str, list[tuple[int, str, list[tuple[str, int]]]]] = {}
    current = None
    for no, raw, body in it:
        cols = _cols(raw, body)
        key = cols[0][0]
        if key in ("add", "mul") and len(cols) == 1:
            if key in blocks:
                raise err(f"duplicate '{key}' block", no, cols[0][1])
            current = key
            blocks[key] = []
            continue
        if current is not None:
            blocks[current].append((no, raw, cols))
            continue
        if key in header:
            raise err(f"duplicate header field '{key}'", no, cols[0][1])
        if key not in ("name", "order", "elements", "zero", "one", "builtin"):
            raise err(f"unknown header field '{key}'", no, cols[0][1])
        header[key] = (no, raw, cols[1:])

    if "builtin" in header:
        no, _, rest = header["builtin"]
        ident = ":".join(t for t, _ in rest)
        try:
            return builtin(ident)
        except (KeyError, ValueError) as e:
            raise err(str(e), no, rest[0][1] if rest else None) from None

    for field in ("order", "elements", "zero", "one"):
        if field not in header:
            raise err(f"missing header field '{field}'")
    no, _, rest = header["order"]
    if len(rest) != 1 or not rest[0][0].isdigit() or int(rest[0][0]) < 1:
        raise err("order must be a positive integer", no, rest[0][1] if rest else None)
    m = int(rest[0][0])
    no, _, rest = header["elements"]
    tokens = [t for t, _ in rest]
    if len(tokens) != m:
        raise err(f"expected {m} element tokens, got {len(tokens)}", no)
    seen: dict[str, int] = {}
    for t, c in rest:
        if t in seen:
            raise err(f"duplicate element token '{t}'", no, c)
        seen[t] = len(seen)

    def element(field):
        no, _, rest = header[field]
        if len(rest) != 1:
            raise err(f"'{field}' takes one token", no)
        t, c = rest[0]
        if t not in seen:
            raise err(f"unknown element token '{t}'", no, c)
        return seen[t]

    zero, one = element("zero"), element("one")
    tables = {}
    for key in ("add", "mul"):
        if key not in blocks:
            raise err(f"missing '{key}' block")
        rows = blocks[key]
        if len(rows) != m:
            where = rows[-1][0] if rows else None
            raise err(f"'{key}' block needs {m} rows, got {len(rows)}", where)
        T = np.empty((m, m), dtype=np.int64)
        for i, (no, _, cols) in enumerate(rows):
            if len(cols) != m:
                raise err(f"row has {len(cols)} entries, expected {m}", no)
            for j, (t, c) in enumerate(cols):
                if t not in seen:
                    raise err(f"unknown element token '{t}'", no, c)
                T[i, j] = seen[t]
        tables[key] = T

    v = find_axiom_violation(tables["add"], tables["mul"], zero, one)
    if v is not None:
        block = "mul" if v.axiom.startswith(("multiplicative", "absorbing", "distributivity")) else "add"
        if v.axiom in ("additive identity", "absorbing zero", "multiplicative identity"):
            row = zero if v.axiom != "multiplicative identity" else one
            colidx = v.witness[0]
        else:
            row, colidx = v.witness[0], v.witness[1]
        no, _, cols = blocks[block][row]
        shown = ", ".join(tokens[i] for i in v.witness)
        raise err(f"axiom '{v.axiom}' violated, witness ({shown})", no, cols[colidx][1])
    name = " ".join(t for t, _ in header["name"][2]) if "name" in header else Path(path or "table").stem
    return FiniteSemiring(tables["add"], tables["mul"], zero, one, tokens, name)


def load(path) -> Semiring:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise TableFileError(f"cannot read: {e.strerror}", path=str(p)) from None
    return loads(text, str(p))


def dumps(sr: FiniteSemiring) -> str:
    width = max(len(t) for t in sr.tokens)

    def row(values):
        return " ".join(sr.tokens[v].ljust(width) for v in values).rstrip()

    out = [f"format {FORMAT} {VERSION}", f"name {sr.name}", f"order {sr.order}",
           "elements " + " ".join(sr.tokens), f"zero {sr.token(sr.zero)}",
           f"one {sr.token(sr.one)}", "add"]
    out += [row(r) for r in sr.add_table.tolist()]
    out.append("mul")
    out += [row(r) for r in sr.mul_table.tolist()]
    return "\n".join(out) + "\n"


def dump(sr: FiniteSemiring, path) -> None:
    Path(path).write_text(dumps(sr))
