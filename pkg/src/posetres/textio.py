"""Line-oriented poset files and table rendering.

File grammar::

    # comment
    poset <name>
    elements <label> <label> ...
    cover <lower> <upper>
    unary <x> <image of x>

Labels are whitespace-free tokens; ``'`` is an ordinary label character.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from posetres.poset import Poset, PosetError, UnknownLabel, from_covers, members
from posetres.properties import UnaryOp
from posetres.residuation import SetValuedTable


class PosetSyntaxError(PosetError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PartialUnaryMap(PosetError):
    pass


@dataclass
class PosetDocument:
    name: str
    elements: list[str]
    covers: list[tuple[str, str]] = field(default_factory=list)
    unary: dict[str, str] | None = None

    def to_poset(self) -> Poset:
        return from_covers(self.elements, self.covers)

    def unary_op(self, p: Poset | None = None) -> UnaryOp | None:
        if self.unary is None:
            return None
        return UnaryOp.from_labels(p or self.to_poset(), self.unary)


def parse_poset_file(text: str) -> PosetDocument:
    name = None
    elements: list[str] | None = None
    covers: list[tuple[str, str]] = []
    unary: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword == "poset":
            if len(args) != 1:
                raise PosetSyntaxError("expected 'poset <name>'", lineno)
            if name is not None:
                raise PosetSyntaxError("duplicate 'poset' header", lineno)
            name = args[0]
        elif keyword == "elements":
            if elements is not None:
                raise PosetSyntaxError("duplicate 'elements' line", lineno)
            if not args:
                raise PosetSyntaxError("'elements' needs at least one label", lineno)
            elements = args
        elif keyword in ("cover", "unary"):
            if len(args) != 2:
                raise PosetSyntaxError(f"expected '{keyword} <label> <label>'", lineno)
            if elements is None:
                raise PosetSyntaxError(f"'{keyword}' before 'elements'", lineno)
            for label in args:
                if label not in elements:
                    raise UnknownLabel(f"line {lineno}: unknown element {label!r}")
            if keyword == "cover":
                covers.append((args[0], args[1]))
            else:
                if args[0] in unary:
                    raise PosetSyntaxError(f"second unary image for {args[0]!r}", lineno)
                unary[args[0]] = args[1]
        else:
            raise PosetSyntaxError(f"unknown keyword {keyword!r}", lineno)
    if name is None:
        raise PosetSyntaxError("missing 'poset <name>' header")
    if elements is None:
        raise PosetSyntaxError("missing 'elements' line")
    if unary:
        missing = [x for x in elements if x not in unary]
        if missing:
            raise PartialUnaryMap(f"no unary image for {', '.join(missing)}")
    return PosetDocument(name, list(elements), covers, unary or None)


def render_poset_file(doc: PosetDocument) -> str:
    lines = [f"poset {doc.name}", "elements " + " ".join(doc.elements)]
    lines += [f"cover {lo} {hi}" for lo, hi in doc.covers]
    if doc.unary is not None:
        lines += [f"unary {x} {doc.unary[x]}" for x in doc.elements]
    return "\n".join(lines) + "\n"


def document_from_poset(name: str, p: Poset, u: UnaryOp | None = None) -> PosetDocument:
    covers = [(p.names[i], p.names[j]) for i, j in p.covers()]
    return PosetDocument(name, list(p.names), covers, u.as_labels(p) if u is not None else None)


# tables

SYMBOLS = {"odot": "⊙", "arrow": "→"}


def format_cell(p: Poset, mask: int) -> str:
    """Bare label for a singleton, ``{x,y}`` in declaration order otherwise."""
    labels = [p.names[i] for i in members(mask)]
    if len(labels) == 1:
        return labels[0]
    return "{" + ",".join(labels) + "}"


def table_cells(t: SetValuedTable) -> list[list[str]]:
    p = t.poset
    header = [SYMBOLS.get(t.kind, t.kind)] + list(p.names)
    rows = [[p.names[x]] + [format_cell(p, m) for m in row] for x, row in enumerate(t.entries)]
    return [header] + rows


def render_table(t: SetValuedTable, fmt: str = "tsv") -> str:
    cells = table_cells(t)
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in cells) + "\n"
    if fmt == "markdown":
        def row(r):
            return "| " + " | ".join(c.replace("|", "\\|") for c in r) + " |"
        lines = [row(cells[0]), "|" + "---|" * len(cells[0])]
        lines += [row(r) for r in cells[1:]]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def parse_table(text: str) -> list[list[str]]:
    """Split a TSV table into whitespace-normalized cells."""
    out = []
    for line in text.splitlines():
        if line.strip():
            out.append(["".join(c.split()) for c in line.split("\t")])
    return out
