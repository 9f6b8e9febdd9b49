"""Built-in worked examples with their printed operation tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from posetres.poset import Poset
from posetres.properties import UnaryOp
from posetres.residuation import SetValuedTable, Variant, build_tables
from posetres.textio import PosetDocument, parse_poset_file, parse_table, table_cells


@dataclass
class FixtureEntry:
    id: str
    document: PosetDocument
    variant: Variant
    # expected verdicts, keyed by a short property name
    expected: dict[str, bool]
    golden: dict[str, list[list[str]]] = field(default_factory=dict)

    @property
    def poset(self) -> Poset:
        return self.document.to_poset()

    def unary(self, p: Poset | None = None) -> UnaryOp | None:
        return self.document.unary_op(p)

    def tables(self, enforce_premises: bool = True) -> tuple[SetValuedTable, SetValuedTable]:
        p = self.poset
        return build_tables(p, self.unary(p), self.variant, enforce_premises)


_SPECS = {
    "fig1": (Variant.BOOLEAN, {"boolean": True, "distributive": True, "complemented": True,
                               "involution": True, "antitone": True, "th1": True}),
    "fig2": (Variant.TH1, {"bounded": True, "complemented": True, "strongly_modular": True,
                           "distributive": False, "th1": True}),
    "fig3": (Variant.TH1, {"th1": True, "modular": False, "involution": True,
                           "antitone": True, "complemented": True}),
    "fig4": (Variant.PIECEWISE, {"th3": True, "involution": True, "antitone": True,
                                 "complemented": False, "lattice": False}),
    "fig5": (Variant.PIECEWISE, {"th3": True, "involution": False, "lattice": True}),
    "fig6": (Variant.RP, {"rp": True, "lattice": False}),
}


def _read(name: str) -> str | None:
    res = resources.files("posetres") / "data" / name
    return res.read_text(encoding="utf-8") if res.is_file() else None


def load_fixture(fid: str) -> FixtureEntry:
    fid = fid.rsplit("/", 1)[-1]
    if fid not in _SPECS:
        raise KeyError(f"unknown fixture {fid!r}; known: {', '.join(_SPECS)}")
    variant, expected = _SPECS[fid]
    doc = parse_poset_file(_read(f"{fid}.poset"))
    golden = {}
    for kind in ("odot", "arrow"):
        text = _read(f"{fid}.{kind}.tsv")
        if text is not None:
            golden[kind] = parse_table(text)
    return FixtureEntry(fid, doc, variant, dict(expected), golden)


FIXTURES = tuple(_SPECS)


def fixture_text(fid: str) -> str:
    return _read(f"{fid}.poset")


def _cell_key(cell: str) -> frozenset[str] | str:
    # brace sets compare as sets; the printed member order is not declaration order
    if cell.startswith("{") and cell.endswith("}"):
        return frozenset(cell[1:-1].split(","))
    return cell


def diff_tables(golden: list[list[str]], t: SetValuedTable) -> list[tuple[str, str, str, str]]:
    """Cells where ``t`` differs from ``golden``: ``(row, column, expected, actual)``."""
    got = table_cells(t)
    out = []
    if golden[0][1:] != got[0][1:] or [r[0] for r in golden] != [r[0] for r in got]:
        out.append(("header", "", " ".join(golden[0][1:]), " ".join(got[0][1:])))
        return out
    for grow, trow in zip(golden[1:], got[1:]):
        for col, g, a in zip(golden[0][1:], grow[1:], trow[1:]):
            if _cell_key(g) != _cell_key(a):
                out.append((grow[0], col, g, a))
    return out


def verify_fixture(entry: FixtureEntry, tables=None) -> dict[str, list[tuple[str, str, str, str]]]:
    """Diff regenerated (or supplied) tables against the printed ones, per table kind."""
    t_odot, t_arrow = tables if tables is not None else entry.tables()
    built = {"odot": t_odot, "arrow": t_arrow}
    return {kind: diff_tables(g, built[kind]) for kind, g in entry.golden.items()}
