# -*- coding: utf-8 -*-

"""The line-oriented text format for hyperrings.

::

    # comments run to the end of the line
    ring R1
    order 4
    zero 0
    one 1
    add
    0 1 2 3
    ...
    mul
    {0} {0} {0} {0}
    ...
    end

Elements are named by their indices. The ``one`` line is optional. Parsed
rings are put in canonical form, with the zero element at index 0, so that
serializing and parsing again gives the same ring.
"""

from dataclasses import dataclass, field
import logging
from pathlib import Path
import re

from .core import HyperRing, bits_of, members_of
from .errors import RingFormatError

logger = logging.getLogger(__name__)

_CELL = re.compile(r"\{([^{}]*)\}")
_HEADER = ("ring", "order", "zero", "one")
_TABLES = ("add", "mul")


@dataclass
class RingDocument:
    """A parsed ring document.

    ``diagnostics`` holds (line, column, message) notes that did not prevent
    parsing, such as relabelling the zero element.
    """

    source: str
    ring: HyperRing
    diagnostics: list = field(default_factory=list)


def _relabel(ring, zero):
    """The ring with elements 0 and ``zero`` swapped."""

    def p(x):
        return 0 if x == zero else (zero if x == 0 else x)

    n = ring.order
    order = [p(x) for x in range(n)]
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            add[order[x]][order[y]] = p(ring.plus(x, y))
            mul[order[x]][order[y]] = bits_of(p(z) for z in members_of(ring.mul[x][y]))
    one = None if ring.one is None else p(ring.one)
    return HyperRing.from_bits(ring.name, add, mul, zero=0, one=one)


def canonical_ring(ring):
    if ring.zero == 0:
        return ring
    return _relabel(ring, ring.zero)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.diagnostics = []
        self.notes = []
        self.header = {}
        self.tables = {}
        self.ends = {}
        self.end_line = None
        self.last_line = 0

    def error(self, line, column, message):
        self.diagnostics.append((line, column, message))

    def scan(self):
        state = None
        for number, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            self.last_line = number
            column = len(line) - len(line.lstrip()) + 1
            keyword, _, rest = line.strip().partition(" ")
            rest = rest.strip()
            if state == "end":
                self.error(number, column, "text after 'end'")
                continue
            if keyword in _HEADER or keyword in _TABLES or keyword == "end":
                if state in _TABLES:
                    self.ends[state] = number
                state = None
            if keyword in _HEADER:
                if keyword in self.header:
                    self.error(number, column, f"duplicate '{keyword}' line")
                    continue
                self.header[keyword] = (rest, number, column + len(keyword) + 1)
            elif keyword in _TABLES:
                if rest:
                    self.error(number, column, f"unexpected text after '{keyword}'")
                if keyword in self.tables:
                    self.error(number, column, f"duplicate '{keyword}' section")
                    state = "skip"
                    continue
                self.tables[keyword] = (number, [])
                state = keyword
            elif keyword == "end":
                self.end_line = number
                state = "end"
            elif state in _TABLES:
                self.tables[state][1].append((number, line))
            elif state != "skip":
                self.error(number, column, f"unknown keyword '{keyword}'")
        if state in _TABLES:
            self.ends[state] = self.last_line + 1
        if self.end_line is None:
            self.error(self.last_line + 1, 1, "missing 'end'")

    def integer(self, key, required=True):
        if key not in self.header:
            if required:
                self.error(1, 1, f"missing '{key}' line")
            return None
        text, line, column = self.header[key]
        try:
            return int(text)
        except ValueError:
            self.error(line, column, f"'{key}' needs an integer, not '{text}'")
            return None

    def element(self, text, n, line, column):
        try:
            value = int(text)
        except ValueError:
            self.error(line, column, f"unknown element '{text}'")
            return None
        if not 0 <= value < n:
            self.error(line, column, f"unknown element '{text}' (order is {n})")
            return None
        return value

    def rows(self, key, n):
        if key not in self.tables:
            self.error(self.last_line + 1, 1, f"missing '{key}' section")
            return None
        start, rows = self.tables[key]
        if len(rows) != n:
            line = rows[n][0] if len(rows) > n else self.ends.get(key, start)
            self.error(line, 1, f"'{key}' needs {n} rows, found {len(rows)}")
            return None
        return rows

    def add_table(self, n):
        rows = self.rows("add", n)
        if rows is None:
            return None
        table = []
        for line, text in rows:
            tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]
            if len(tokens) != n:
                self.error(
                    line, 1, f"an 'add' row needs {n} entries, found {len(tokens)}"
                )
                table.append([0] * n)
                continue
            table.append([self.element(t, n, line, c) or 0 for t, c in tokens])
        return table

    def mul_table(self, n):
        rows = self.rows("mul", n)
        if rows is None:
            return None
        table = []
        for line, text in rows:
            cells = list(_CELL.finditer(text))
            leftover = _CELL.sub(" ", text).strip()
            if leftover:
                column = text.find(leftover[0]) + 1
                token = leftover.split()[0]
                self.error(line, column, f"unexpected '{token}' in 'mul' row")
            if len(cells) != n:
                self.error(line, 1, f"a 'mul' row needs {n} cells, found {len(cells)}")
                table.append([[0]] * n)
                continue
            row = []
            for match in cells:
                column = match.start() + 1
                members = [t.strip() for t in match.group(1).split(",") if t.strip()]
                if not members:
                    self.error(line, column, "empty 'mul' cell")
                    row.append([0])
                    continue
                values = [self.element(t, n, line, column) for t in members]
                row.append([v for v in values if v is not None] or [0])
            table.append(row)
        return table

    def parse(self):
        self.scan()
        n = self.integer("order")
        if n is not None and n < 1:
            _, line, column = self.header["order"]
            self.error(line, column, f"the order must be positive, not {n}")
            n = None
        if n is None:
            raise _failure(self.diagnostics)
        zero = self.integer("zero")
        one = self.integer("one", required=False)
        for key, value in (("zero", zero), ("one", one)):
            if value is not None and not 0 <= value < n:
                _, line, column = self.header[key]
                self.error(line, column, f"unknown element '{value}' (order is {n})")
        add = self.add_table(n)
        mul = self.mul_table(n)
        if self.diagnostics:
            raise _failure(self.diagnostics)
        name = self.header["ring"][0] if "ring" in self.header else "ring"
        ring = HyperRing(name, add, mul, zero=zero, one=one)
        if zero != 0:
            self.notes.append(
                (self.header["zero"][1], 1, f"zero relabelled from {zero} to 0")
            )
            ring = _relabel(ring, zero)
        return ring


def _failure(diagnostics):
    return RingFormatError(sorted(diagnostics))


def parse_ring(text):
    """Parse a ring document.

    Raises
    ------
    RingFormatError
        With every line-numbered problem found.
    """
    parser = _Parser(text)
    ring = parser.parse()
    logger.debug(f"parsed {ring.name} of order {ring.order}")
    return RingDocument(text, ring, parser.notes)


def read_ring(path):
    """Parse the ring document in a file."""
    path = Path(path)
    return parse_ring(path.read_text())


def serialize_ring(ring):
    """The canonical text of a ring."""
    ring = canonical_ring(ring)
    lines = [
        f"ring {ring.name}",
        f"order {ring.order}",
        f"zero {ring.zero}",
    ]
    if ring.one is not None:
        lines.append(f"one {ring.one}")
    lines.append("add")
    for x in range(ring.order):
        lines.append(" ".join(str(ring.plus(x, y)) for y in range(ring.order)))
    lines.append("mul")
    for row in ring.mul:
        lines.append(
            " ".join(
                "{" + ",".join(str(z) for z in members_of(cell)) + "}" for cell in row
            )
        )
    lines.append("end")
    return "\n".join(lines) + "\n"
