"""The golden acceptance suite.

Each criterion is a function returning a dict ``{name, ok, detail, seconds}``
and is intentionally self-contained: expected values come from independent
oracles (the Stirling recurrence, binomial counts, direct re-enumeration),
never from the code paths under test.
"""

from __future__ import annotations

import time
from math import comb

from .arrows import certify_bad_coloring, check_arrow_exhaustive, find_bad_coloring, min_ramsey_witness
from .category import (
    check_fragment_isomorphism,
    dram_fragment,
    dramop_word_functor,
    gr_fragment,
    ram_fragment,
    thin_from_preorder,
    validate_fragment,
    vec_fragment,
)
from .groups import cycle_action, cyclic_group, trivial_action
from .preadjunction import (
    PreAdjunction,
    build_nonthin_sequence,
    check_card_inequality,
    compose_pa,
    identity_pa,
    pa_gr_decorated_to_plain,
    pa_gr_plain_to_decorated,
    pa_gr_to_dramop,
    pa_omega_to_nonthin,
    pa_ram_to_dramop,
    recheck_failures,
    verify_pa,
)
from .surjections import compose_rigid, dual, enumerate_rsurj, rsurj_to_word, word_to_rsurj
from .tukey import chain_preorder, cofinal_companion, monotonize, omega, verify_trace
from .words import WordContext, enumerate_words, format_word, parse_word, plain_context, substitute

GOLDEN_WORD = "c a b a a x1 d x1^g2 x1^g2 c a x1"


def _stirling(n: int, m: int) -> int:
    if n == m:
        return 1
    if m < 1 or m > n:
        return 0
    return m * _stirling(n - 1, m) + _stirling(n - 1, m - 1)


def _z3_letters_context() -> WordContext:
    z3 = cyclic_group(3)
    return WordContext(cycle_action(z3, "abcd", [1, 2, 0, 3]))


def _swap_context() -> WordContext:
    z2 = cyclic_group(2)
    return WordContext(cycle_action(z2, "ab", [1, 0]))


def _result(name: str, ok: bool, detail: str, started: float) -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail, "seconds": time.perf_counter() - started}


def criterion_1_worked_substitution() -> dict:
    started = time.perf_counter()
    ctx = _z3_letters_context()
    u = parse_word("c a x1 a x1^g2 x2 d x3 x2^g2 x1^g a x3^g", ctx)
    v = parse_word("b x1 x1^g2", ctx)
    best = min(_timed_substitution(u, v) for _ in range(3))
    got = format_word(substitute(u, v))
    ok = got == GOLDEN_WORD and best < 0.001
    return _result("1 worked substitution", ok,
                   f"result {got!r}, substitute in {best * 1e6:.0f}us", started)


def _timed_substitution(u, v) -> float:
    t0 = time.perf_counter()
    substitute(u, v)
    return time.perf_counter() - t0


def criterion_2_counting_identities() -> dict:
    started = time.perf_counter()
    pc = plain_context()
    for n in range(1, 8):
        for m in range(1, n + 1):
            expected = _stirling(n, m)
            rs = sum(1 for _ in enumerate_rsurj(n, m))
            ws = sum(1 for _ in enumerate_words(m, n, pc))
            if rs != expected or ws != expected:
                return _result("2 counting identities", False,
                               f"mismatch at (n={n}, m={m}): rsurj {rs}, words {ws}, S {expected}", started)
    f8 = ram_fragment(8)
    for m in range(1, 9):
        for n in range(m, 9):
            if len(f8.hom(m, n)) != comb(n, m):
                return _result("2 counting identities", False, f"ram hom({m},{n}) != C({n},{m})", started)
    return _result("2 counting identities", True,
                   "rsurj and plain word counts match the Stirling recurrence (n<=7); ram homs binomial (n<=8)",
                   started)


def criterion_3_duality_suite() -> dict:
    started = time.perf_counter()
    pc = plain_context()
    for n in range(1, 7):
        for m in range(1, n + 1):
            for u in enumerate_words(m, n, pc):
                if rsurj_to_word(word_to_rsurj(u)) != u:
                    return _result("3 duality suite", False, f"round trip broke on {u}", started)
            for k in range(1, m + 1):
                for u in enumerate_words(m, n, pc):
                    fu = word_to_rsurj(u)
                    for v in enumerate_words(k, m, pc):
                        if word_to_rsurj(substitute(u, v)) != compose_rigid(word_to_rsurj(v), fu):
                            return _result("3 duality suite", False,
                                           f"f_(u.v) != f_v o f_u at ({n},{m},{k})", started)
    for n in range(1, 6):
        for m in range(1, n + 1):
            for k in range(1, m + 1):
                for f in enumerate_rsurj(n, m):
                    df = dual(f)
                    for g in enumerate_rsurj(m, k):
                        dg = dual(g)
                        if dual(compose_rigid(g, f)) != tuple(df[i - 1] for i in dg):
                            return _result("3 duality suite", False,
                                           f"dual contravariance broke at ({n},{m},{k})", started)
    return _result("3 duality suite", True,
                   "f_(u.v) = f_v o f_u and round trips (n<=6); dual contravariance (chains<=5)", started)


def criterion_4_ramsey_search() -> dict:
    started = time.perf_counter()
    n, _ = min_ramsey_witness(lambda k: ram_fragment(k), 2, 3, 2, 8)
    if n != 6:
        return _result("4 ramsey search", False, f"minimal n for (3)^2_2 is {n}, expected 6", started)
    f5 = ram_fragment(5)
    bad = find_bad_coloring(f5, 2, 3, 5, 2)
    if bad is None or not certify_bad_coloring(f5, 2, 3, 5, bad):
        return _result("4 ramsey search", False, "n=5 counterexample missing or uncertified", started)
    f10 = ram_fragment(10)
    agreed = 0
    for c in range(1, 11):
        for a in range(1, c + 1):
            if comb(c, a) > 16:
                continue
            for b in range(a, c + 1):
                ex = check_arrow_exhaustive(f10, a, b, c, 2)
                bt = find_bad_coloring(f10, a, b, c, 2)
                if ex.holds != (bt is None):
                    return _result("4 ramsey search", False,
                                   f"engines disagree at (A={a},B={b},C={c})", started)
                if bt is not None and not certify_bad_coloring(f10, a, b, c, bt):
                    return _result("4 ramsey search", False,
                                   f"uncertified counterexample at (A={a},B={b},C={c})", started)
                agreed += 1
    return _result("4 ramsey search", True,
                   f"minimal n = 6; n=5 counterexample certified; engines agree on {agreed} instances",
                   started)


def _verified_pa_instances() -> list[tuple[PreAdjunction, list, list]]:
    """The pre-adjunctions the acceptance run verifies, with their bounds."""
    swap = _swap_context()
    z2 = cyclic_group(2)
    plain_z2 = WordContext(trivial_action(z2))
    one_letter = WordContext(trivial_action(z2, "a"))

    out: list[tuple[PreAdjunction, list, list]] = []
    out.append((identity_pa(ram_fragment(3)), [1, 2, 3], [1, 2, 3]))
    out.append((pa_gr_plain_to_decorated(swap, 3), [1, 2, 3], [1, 2, 3]))
    out.append((pa_gr_decorated_to_plain(swap, 6), [1, 2], list(range(1, 7))))
    out.append((pa_gr_to_dramop(plain_z2, 6, 6), [1, 2], list(range(1, 7))))
    out.append((pa_ram_to_dramop(4), [1, 2, 3, 4], list(range(1, 6))))

    pa1 = pa_gr_plain_to_decorated(swap, 6)
    pa2 = pa_gr_decorated_to_plain(swap, 6, source=pa1.target)
    out.append((compose_pa(pa1, pa2), [1, 2], list(range(1, 7))))

    q1 = pa_gr_plain_to_decorated(one_letter, 6)
    q2 = pa_gr_decorated_to_plain(one_letter, 6, source=q1.target)
    chain2 = compose_pa(q1, q2)
    q3 = pa_gr_to_dramop(plain_z2, 6, 6, source=chain2.target)
    out.append((compose_pa(chain2, q3), [1, 2], list(range(1, 7))))
    return out


def _broken_phi_pa() -> PreAdjunction:
    f3 = ram_fragment(3)
    return PreAdjunction("broken-phi", f3, f3, lambda x: x, lambda y: y,
                         lambda x, y, u: f3.hom(x, y)[0])


def _broken_thin_pa() -> PreAdjunction:
    src = ram_fragment(2)
    tgt = thin_from_preorder(chain_preorder(2))
    return PreAdjunction("broken-thin", src, tgt, lambda x: x - 1, lambda y: y + 1,
                         lambda x, y, u: src.hom(x, y + 1)[0])


def criterion_5_pa_verification() -> dict:
    started = time.perf_counter()
    details = []
    for pa, src_objs, tgt_objs in _verified_pa_instances():
        report = verify_pa(pa, src_objs, tgt_objs)
        details.append(f"{pa.name}:{report.instances}")
        if not report.ok:
            return _result("5 transport condition", False,
                           f"{pa.name} has {len(report.failures)} failures", started)
        if report.instances == 0:
            return _result("5 transport condition", False, f"{pa.name} checked nothing", started)
    broken = _broken_phi_pa()
    rep = verify_pa(broken, [1, 2, 3], [1, 2, 3])
    if not rep.failures or not recheck_failures(broken, rep):
        return _result("5 transport condition", False,
                       "mutated family produced no certified failure", started)
    return _result("5 transport condition", True,
                   "zero failures on " + ", ".join(details) +
                   f"; mutation yields {len(rep.failures)} certified failures", started)


def criterion_6_cardinality() -> dict:
    started = time.perf_counter()
    for pa, src_objs, _ in _verified_pa_instances():
        card = check_card_inequality(pa, src_objs)
        if not card.ok:
            return _result("6 cardinality diagnostic", False,
                           f"{pa.name} violates the inequality: {card.violations[:1]}", started)
    broken = _broken_thin_pa()
    card = check_card_inequality(broken, [1, 2])
    vrep = verify_pa(broken, [1, 2], [0, 1])
    if card.ok or vrep.ok:
        return _result("6 cardinality diagnostic", False,
                       "the mutated thin-target family was not flagged", started)
    return _result("6 cardinality diagnostic", True,
                   "inequality holds on every verified family; thin-target mutation flagged by both checks",
                   started)


def criterion_7_nonthin_pipeline() -> dict:
    started = time.perf_counter()
    f6 = ram_fragment(6)
    seq = build_nonthin_sequence(f6, 3)
    if len(seq.objects) < 3:
        return _result("7 growing-sequence pipeline", False, f"sequence too short: {seq.objects}", started)
    if not all(c["forward_at_least_two"] and c["reverse_empty"] for c in seq.certificates):
        return _result("7 growing-sequence pipeline", False, f"certificates failed: {seq.certificates}", started)
    pa = pa_omega_to_nonthin(f6, [2, 3, 4, 5, 6])
    report = verify_pa(pa, [0, 1, 2, 3, 4], list(range(1, 7)))
    if not report.ok:
        return _result("7 growing-sequence pipeline", False,
                       f"thin-chain embedding failed: {len(report.failures)} failures", started)
    return _result("7 growing-sequence pipeline", True,
                   f"sequence {seq.objects} certified; thin-chain embedding verified on 0..4 "
                   f"({report.instances} instances)", started)


def criterion_8_monotonization() -> dict:
    started = time.perf_counter()
    om = omega()

    def f(v):
        return v + 10 if v % 2 == 0 else v // 2

    trace = monotonize(f, om, om, steps=30, prefix_size=30)
    check = verify_trace(trace, om, om)
    if not check.ok or len(trace.fhat) != 30:
        return _result("8 monotonization", False, f"trace invariants failed: {check}", started)
    companion = cofinal_companion(lambda v: 2 * v, om, om, 20)
    if not companion.implication_ok:
        return _result("8 monotonization", False, "companion implication failed", started)
    return _result("8 monotonization", True,
                   f"30-element trace monotone in {trace.rounds} rounds; companion implication checked on "
                   f"{companion.checked_pairs} pairs", started)


def criterion_9_fragment_laws() -> dict:
    started = time.perf_counter()
    z2 = cyclic_group(2)
    fragments = [
        ram_fragment(5),
        dram_fragment(5),
        gr_fragment(WordContext(trivial_action(z2)), 4),
        gr_fragment(_swap_context(), 3),
        vec_fragment(2, 3),
    ]
    for frag in fragments:
        report = validate_fragment(frag)
        if not report.ok:
            return _result("9 fragment laws", False, f"{frag.name} violates the laws", started)
    grf, dop, on_m = dramop_word_functor(5, plain_context())
    iso = check_fragment_isomorphism(grf, dop, on_m)
    if not iso["ok"]:
        return _result("9 fragment laws", False, f"words/surjections correspondence broke: {iso['failures'][:1]}",
                       started)
    return _result("9 fragment laws", True,
                   "laws hold for ram(5), dram(5), gr(0,Z2,4), gr(ab,Z2,3), vec(F2,3); "
                   "the words/surjections fragment isomorphism preserves composition (n<=5)", started)


CRITERIA = (
    criterion_1_worked_substitution,
    criterion_2_counting_identities,
    criterion_3_duality_suite,
    criterion_4_ramsey_search,
    criterion_5_pa_verification,
    criterion_6_cardinality,
    criterion_7_nonthin_pipeline,
    criterion_8_monotonization,
    criterion_9_fragment_laws,
)

TIME_LIMITS = {
    "1 worked substitution": 5.0,  # the inner substitution itself must stay under 1ms
    "2 counting identities": 5.0,
    "3 duality suite": 10.0,
    "4 ramsey search": 60.0,
    "5 transport condition": 300.0,
    "6 cardinality diagnostic": 300.0,
    "7 growing-sequence pipeline": 60.0,
    "8 monotonization": 1.0,
    "9 fragment laws": 60.0,
}


def run_golden_suite() -> dict:
    criteria = []
    for fn in CRITERIA:
        item = fn()
        limit = TIME_LIMITS.get(item["name"])
        if limit is not None and item["seconds"] > limit:
            item["ok"] = False
            item["detail"] += f" (over the {limit:.0f}s budget)"
        criteria.append(item)
    return {"ok": all(c["ok"] for c in criteria), "criteria": criteria}
