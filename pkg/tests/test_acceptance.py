"""Acceptance gate.

Each criterion records a PASS/FAIL line in ``acceptance_log.RESULTS``; the
lines are printed in the terminal summary. Run directly with
``python3 tests/test_acceptance.py`` or through pytest.
"""

import random
import sys
import time
from itertools import product

import pytest

from acceptance_log import RESULTS
from posetres import (
    Premise,
    Variant,
    check_corollary,
    enumerate_posets,
    is_distributive,
    is_relatively_pseudocomplemented,
    is_strongly_modular,
    load_fixture,
    sweep,
    th1_premises,
    th3_premises,
    verify_identity_suite,
    verify_left_adjointness,
)
from posetres.cli import main as cli_main
from posetres.fixtures import diff_tables, verify_fixture
from posetres.poset import bit
from posetres.properties import UnaryOp, check_unary, general_inclusions, is_boolean, is_modular
from posetres.residuation import arrow, odot

GOLDEN = [("fig3", "odot"), ("fig3", "arrow"), ("fig1", "odot"), ("fig1", "arrow"),
          ("fig4", "odot"), ("fig4", "arrow"), ("fig5", "odot"), ("fig5", "arrow"),
          ("fig6", "odot"), ("fig6", "arrow")]

NAMED_CELLS = [
    ("fig3", "odot", "d'", "b'", {"a", "c"}),
    ("fig3", "arrow", "d'", "a", {"b'", "c'"}),
    ("fig4", "odot", "a", "e'", {"f"}),
    ("fig6", "odot", "c", "d", {"a", "b"}),
    ("fig6", "arrow", "c", "d", {"d"}),
]


def record(key, ok, detail=""):
    RESULTS[key] = (bool(ok), detail)
    return ok


_cache = {}


def model(fid):
    if fid not in _cache:
        entry = load_fixture(fid)
        p = entry.poset
        u = entry.unary(p)
        _cache[fid] = (entry, p, u, entry.tables())
    return _cache[fid]


# criterion 1: printed tables, exact set equality

@pytest.mark.parametrize("fid,kind", GOLDEN, ids=[f"{f}-{k}" for f, k in GOLDEN])
def test_c1_golden_table(fid, kind):
    start = time.perf_counter()
    entry, p, u, tables = model(fid)
    t = tables[0] if kind == "odot" else tables[1]
    diffs = diff_tables(entry.golden[kind], t)
    elapsed = time.perf_counter() - start
    n = p.n
    detail = (f"{n}x{n} exact" if not diffs else
              f"{len(diffs)} of {n * n} cells differ, first {diffs[0][0]} {diffs[0][1]}: "
              f"printed {diffs[0][2]}, computed {diffs[0][3]}")
    record(f"C1 golden {fid} {kind}", not diffs and elapsed < 1.0, detail)
    assert not diffs, detail
    assert elapsed < 1.0


@pytest.mark.parametrize("fid,kind,x,y,want", NAMED_CELLS,
                         ids=[f"{c[0]}-{c[2]}{c[1]}{c[3]}" for c in NAMED_CELLS])
def test_c1_named_cell(fid, kind, x, y, want):
    _, p, u, tables = model(fid)
    t = tables[0] if kind == "odot" else tables[1]
    got = set(t.cell(x, y))
    sym = "⊙" if kind == "odot" else "→"
    record(f"C1 cell {fid} {x}{sym}{y}", got == want, f"want {sorted(want)}, got {sorted(got)}")
    assert got == want


# criterion 2: property verdicts

def test_c2_property_verdicts():
    start = time.perf_counter()
    checks = {}
    _, p1, u1, _ = model("fig1")
    unary1 = check_unary(p1, u1)
    checks["fig1 Boolean"] = is_boolean(p1, u1).passed
    checks["fig1 involution"] = unary1["involution x''=x"].passed
    checks["fig1 antitone"] = unary1["antitone x<=y => y'<=x'"].passed

    _, p2, u2, _ = model("fig2")
    unary2 = check_unary(p2, u2)
    checks["fig2 bounded"] = p2.bounded
    checks["fig2 complemented"] = (unary2["complemented L(x,x')=0"].passed
                                   and unary2["complemented U(x,x')=1"].passed)
    checks["fig2 strongly modular"] = is_strongly_modular(p2).passed
    checks["fig2 not distributive"] = not is_distributive(p2).passed

    _, p3, u3, _ = model("fig3")
    checks["fig3 general premises"] = th1_premises(p3, u3).passed
    mod = is_modular(p3).first_failure()
    checks["fig3 not modular"] = mod is not None
    if mod is not None:
        a, f, e = (p3.index(x) for x in ("a", "f", "e"))
        L, U = p3.lower_cone, p3.upper_cone
        lhs = L(U(bit(a) | bit(f)) | bit(e))
        rhs = L(U(bit(a) | L(bit(f) | bit(e))))
        checks["fig3 witness (a,f,e)"] = (mod.witness == ("a", "f", "e")
                                          and p3.labels(lhs) == p3.labels(L(bit(e)))
                                          and p3.labels(rhs) == p3.labels(L(bit(a)))
                                          and lhs != rhs)

    for fid in ("fig4", "fig5"):
        _, p, u, _ = model(fid)
        checks[f"{fid} piecewise premises"] = th3_premises(p, u).passed
    _, p5, u5, _ = model("fig5")
    checks["fig5 not involution"] = not check_unary(p5, u5)["involution x''=x"].passed

    _, p6, _, _ = model("fig6")
    checks["fig6 relatively pseudocomplemented"] = is_relatively_pseudocomplemented(p6).passed
    elapsed = time.perf_counter() - start

    bad = [k for k, ok in checks.items() if not ok]
    record("C2 property verdicts", not bad and elapsed < 1.0,
           f"{len(checks)} verdicts, {elapsed:.2f}s" + (f", wrong: {bad}" if bad else ""))
    assert not bad
    assert elapsed < 1.0


# criterion 3: adjointness on every criterion-1 fixture

@pytest.mark.parametrize("fid", ["fig1", "fig3", "fig4", "fig5", "fig6"])
def test_c3_adjointness(fid):
    start = time.perf_counter()
    entry, p, _, tables = model(fid)
    verdict = verify_left_adjointness(p, *tables)
    elapsed = time.perf_counter() - start
    record(f"C3 adjointness {fid} {entry.variant.value}", verdict.holds and elapsed < 1.0,
           f"{p.n ** 3} triples, {elapsed:.3f}s")
    assert verdict.holds, verdict.describe()
    assert elapsed < 1.0


# criterion 4: identity suites

GENERAL_LAWS = ["x⊙0=0", "0→x=0'", "x→0=x'", "x→x'=x'", "1→x=x", "x⊙x=x", "x⊙1=x", "1⊙x=x"]
SUITES = [
    ("fig1", Variant.TH1, GENERAL_LAWS),
    ("fig2", Variant.TH1, GENERAL_LAWS),
    ("fig3", Variant.TH1, GENERAL_LAWS),
    ("fig1", Variant.BOOLEAN, ["x⊙y=0 iff x<=y'", "x→y=1 iff x<=y"]),
    ("fig4", Variant.PIECEWISE, None),
    ("fig5", Variant.PIECEWISE, None),
    ("fig6", Variant.RP, ["x→y=1 iff x<=y"]),
]


@pytest.mark.parametrize("fid,variant,laws", SUITES,
                         ids=[f"{s[0]}-{s[1].value}" for s in SUITES])
def test_c4_identity_suite(fid, variant, laws):
    start = time.perf_counter()
    entry, p, u, _ = model(fid)
    tables = entry.tables() if variant is entry.variant else None
    if tables is None:
        from posetres import build_tables
        tables = build_tables(p, u, variant)
    report = verify_identity_suite(p, u, variant, tables)
    elapsed = time.perf_counter() - start
    missing = [law for law in laws or [] if law not in report]
    ok = report.passed and not missing and elapsed < 1.0
    failure = report.first_failure()
    record(f"C4 identities {fid} {variant.value}", ok,
           f"{len(report.verdicts)} laws" + (f", {failure.describe()}" if failure else "")
           + (f", missing {missing}" if missing else ""))
    assert not missing
    assert report.passed, report.describe()
    assert elapsed < 1.0


# criterion 5: exhaustive sweeps

@pytest.mark.parametrize("premise", [Premise.TH1, Premise.TH3, Premise.RP],
                         ids=lambda p: p.value)
def test_c5_sweep(premise):
    report = sweep(premise, 5)
    record(f"C5 sweep {premise.value} n<=5", report.ok and report.models_passing_premises > 0,
           report.summary())
    assert report.models_passing_premises > 0
    assert report.ok, (report.adjointness_failures[:3], report.identity_failures[:3])


def test_c5_corollary():
    report = check_corollary(5)
    record("C5 corollary n<=5", not report.failures and report.qualifying_models > 0,
           f"{report.qualifying_models} qualifying models, {len(report.failures)} failures")
    assert report.qualifying_models > 0
    assert not report.failures


# criterion 6: cone laws on random enumerated posets

def _subsets_of(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def test_c6_cone_laws():
    start = time.perf_counter()
    rng = random.Random(20240)
    pool = [p for n in range(1, 7) for p in enumerate_posets(n)]
    sample = rng.sample(pool, 200)
    problems = []
    for p in sample:
        L, U = p.lower_cone, p.upper_cone
        full = p.carrier
        cones = {}
        for a in range(full + 1):
            la, ua = L(a), U(a)
            cones[a] = (la, ua)
            if L(U(la)) != la or U(L(ua)) != ua:
                problems.append((p.up, a, "LUL/ULU"))
            # A ⊆ LU(A) and A ⊆ UL(A)
            if a & ~L(ua) or a & ~U(la):
                problems.append((p.up, a, "extensive"))
        for a in range(full + 1):
            la, ua = cones[a]
            for b in _subsets_of(a):
                lb, ub = cones[b]
                if la & ~lb or ua & ~ub:
                    problems.append((p.up, (b, a), "antitone"))
        # the identity map plus three seeded random maps
        maps = [UnaryOp(tuple(range(p.n)))]
        maps += [UnaryOp(tuple(rng.randrange(p.n) for _ in range(p.n))) for _ in range(3)]
        for u in maps:
            report = general_inclusions(p, u)
            if not report.passed:
                problems.append((p.up, u.image, report.first_failure().describe()))
    elapsed = time.perf_counter() - start
    record("C6 cone laws (200 posets, n<=6)", not problems and elapsed < 30.0,
           f"{len(sample)} posets, {elapsed:.1f}s" + (f", first problem {problems[0]}"
                                                      if problems else ""))
    assert not problems, problems[:3]
    assert elapsed < 30.0


# criterion 7: mutation detection

def _mutant(p, mask, k):
    """A deterministic different value for a cell: the k-th singleton not equal to ``mask``."""
    options = [bit(i) for i in range(p.n) if bit(i) != mask]
    return options[k % len(options)]


def test_c7_mutation_detection():
    start = time.perf_counter()
    undetected = []
    mutations = 0
    caught_by_adjointness = 0
    for fid, kind in GOLDEN:
        entry, p, u, tables = model(fid)
        golden = entry.golden[kind]
        computed = tables[0] if kind == "odot" else tables[1]
        op = odot if kind == "odot" else arrow
        for (x, y), k in zip(product(range(p.n), repeat=2), range(10 ** 6)):
            mutations += 1
            value = _mutant(p, computed[x, y], k)
            label = p.names[value.bit_length() - 1]

            # corrupt the printed table: the regenerated table must differ at that cell
            bad_golden = [list(r) for r in golden]
            original = bad_golden[x + 1][y + 1]
            bad_golden[x + 1][y + 1] = label if label != original else "{}"
            diffs = diff_tables(bad_golden, computed)
            cell = (p.names[x], p.names[y])
            hit = [d for d in diffs if (d[0], d[1]) == cell]
            # the witness re-evaluates: the cell recomputed from the definition
            witnessed = bool(hit) and op(p, u, entry.variant, x, y) == computed[x, y]

            # corrupt the computed table: adjointness or the diff must catch it
            t_odot, t_arrow = tables
            if kind == "odot":
                t_odot = t_odot.replace(x, y, value)
            else:
                t_arrow = t_arrow.replace(x, y, value)
            verdict = verify_left_adjointness(p, t_odot, t_arrow)
            caught = False
            if not verdict.holds:
                a, b, c, lhs, rhs = verdict.counterexample
                ia, ib, ic = p.index(a), p.index(b), p.index(c)
                caught = (p.set_leq(t_odot[ia, ib], bit(ic)) == lhs
                          and p.set_leq(bit(ia), t_arrow[ib, ic]) == rhs and lhs != rhs)
                caught_by_adjointness += caught
            else:
                regenerated = verify_fixture(entry, (t_odot, t_arrow))[kind]
                caught = any((d[0], d[1]) == cell for d in regenerated)
            if not (witnessed and caught):
                undetected.append((fid, kind, cell, label))
    elapsed = time.perf_counter() - start
    record("C7 mutation detection", not undetected and elapsed < 5.0,
           f"{mutations} single-cell mutations, {caught_by_adjointness} also break adjointness, "
           f"{len(undetected)} undetected, {elapsed:.2f}s")
    assert not undetected, undetected[:5]
    assert elapsed < 5.0


def test_c7_cli_verify_fails_on_corrupted_golden(monkeypatch):
    import io
    from posetres import fixtures as fx

    real = fx.load_fixture

    def corrupted(fid):
        entry = real(fid)
        if entry.id == "fig6":
            entry.golden["arrow"][4][5] = "a"  # row c, column d; the true value is d
        return entry

    monkeypatch.setattr("posetres.cli.load_fixture", corrupted)
    out = io.StringIO()
    code = cli_main(["fixtures", "--verify"], out)
    text = out.getvalue()
    fig6 = text.split("fig6:")[1]
    ok = code == 1 and "c d: printed a, computed d" in fig6 and "breaks adjointness" in fig6
    record("C7 cli fixtures --verify on corruption", ok, "fig6 c→d corrupted to a")
    assert ok, fig6


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
