"""Preorders, Tukey and cofinal maps, and the monotonization construction.

Finite preorders are boolean ``leq`` tables checked for reflexivity and
transitivity; boundedness, cofinality and the Tukey/cofinal map checks are
exhaustive over subsets and therefore capped at 15 elements.

Countable preorders are *generated*: an enumeration, a decidable ``leq`` and
an upper-bound oracle.  Whether such a preorder is bounded is a declared
attribute, never inferred.  All checks on generated preorders quantify over
an enumerated prefix only and say so ("prefix-certified").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import ValidationError

SUBSET_CAP = 15


@dataclass(frozen=True)
class FinitePreorder:
    leq: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.leq)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]


def validate_preorder(leq) -> FinitePreorder:
    rows = tuple(tuple(bool(v) for v in row) for row in leq)
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValidationError("not_preorder", "leq table must be square")
    for a in range(n):
        if not rows[a][a]:
            raise ValidationError("not_preorder", f"leq is not reflexive at {a}", a=a)
    for a in range(n):
        for b in range(n):
            if rows[a][b]:
                for c in range(n):
                    if rows[b][c] and not rows[a][c]:
                        raise ValidationError(
                            "not_preorder", f"leq is not transitive on ({a},{b},{c})", a=a, b=b, c=c
                        )
    return FinitePreorder(rows)


def chain_preorder(n: int) -> FinitePreorder:
    return FinitePreorder(tuple(tuple(a <= b for b in range(n)) for a in range(n)))


def antichain_preorder(n: int) -> FinitePreorder:
    return FinitePreorder(tuple(tuple(a == b for b in range(n)) for a in range(n)))


def preorder_from_pairs(n: int, pairs) -> FinitePreorder:
    """Reflexive-transitive closure of the given ``a <= b`` pairs."""
    rows = [[a == b for b in range(n)] for a in range(n)]
    for a, b in pairs:
        rows[a][b] = True
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(n):
                if rows[a][b]:
                    for c in range(n):
                        if rows[b][c] and not rows[a][c]:
                            rows[a][c] = True
                            changed = True
    return FinitePreorder(tuple(tuple(r) for r in rows))


def _below_masks(p: FinitePreorder) -> list[int]:
    return [sum(1 << x for x in range(p.size) if p.le(x, a)) for a in range(p.size)]


def _above_masks(p: FinitePreorder) -> list[int]:
    return [sum(1 << x for x in range(p.size) if p.le(a, x)) for a in range(p.size)]


def subset_bounded(p: FinitePreorder, mask: int, below: list[int] | None = None) -> bool:
    below = below if below is not None else _below_masks(p)
    return any(mask & below[b] == mask for b in range(p.size))


def subset_cofinal(p: FinitePreorder, mask: int, above: list[int] | None = None) -> bool:
    above = above if above is not None else _above_masks(p)
    return all(above[a] & mask for a in range(p.size))


@dataclass
class PreorderReport:
    directed: bool
    bounded_subsets: list[tuple[int, ...]]
    cofinal_subsets: list[tuple[int, ...]]
    equivalence_classes: list[tuple[int, ...]]
    quotient: FinitePreorder
    class_of: tuple[int, ...]


def preorder_predicates(p: FinitePreorder, subset_cap: int = SUBSET_CAP) -> PreorderReport:
    if p.size > subset_cap:
        raise ValidationError("size_cap_exceeded", f"subset predicates are capped at {subset_cap} elements",
                              cap=subset_cap, size=p.size)
    below = _below_masks(p)
    above = _above_masks(p)
    bounded, cofinal = [], []
    for mask in range(1, 1 << p.size):
        subset = tuple(x for x in range(p.size) if mask >> x & 1)
        if subset_bounded(p, mask, below):
            bounded.append(subset)
        if subset_cofinal(p, mask, above):
            cofinal.append(subset)
    directed = all(
        subset_bounded(p, (1 << a) | (1 << b), below)
        for a in range(p.size) for b in range(a, p.size)
    )
    class_of = [-1] * p.size
    classes: list[list[int]] = []
    for a in range(p.size):
        if class_of[a] >= 0:
            continue
        cls = [x for x in range(p.size) if p.le(a, x) and p.le(x, a)]
        for x in cls:
            class_of[x] = len(classes)
        classes.append(cls)
    reps = [cls[0] for cls in classes]
    quotient = FinitePreorder(tuple(tuple(p.le(ra, rb) for rb in reps) for ra in reps))
    return PreorderReport(directed, bounded, cofinal,
                          [tuple(c) for c in classes], quotient, tuple(class_of))


@dataclass
class MapVerdict:
    ok: bool
    witness: tuple[int, ...] | None = None


def is_tukey_map(f: Sequence[int], a: FinitePreorder, b: FinitePreorder,
                 subset_cap: int = SUBSET_CAP) -> MapVerdict:
    """True iff every subset unbounded in the domain has an unbounded image;
    otherwise the first offending subset is the witness."""
    if a.size > subset_cap:
        raise ValidationError("size_cap_exceeded", f"Tukey check capped at {subset_cap} elements",
                              cap=subset_cap, size=a.size)
    below_a = _below_masks(a)
    below_b = _below_masks(b)
    for mask in range(1, 1 << a.size):
        if subset_bounded(a, mask, below_a):
            continue
        image = 0
        for x in range(a.size):
            if mask >> x & 1:
                image |= 1 << f[x]
        if subset_bounded(b, image, below_b):
            return MapVerdict(False, tuple(x for x in range(a.size) if mask >> x & 1))
    return MapVerdict(True)


def is_cofinal_map(g: Sequence[int], dom: FinitePreorder, cod: FinitePreorder,
                   subset_cap: int = SUBSET_CAP) -> MapVerdict:
    """True iff every cofinal subset of the domain has a cofinal image."""
    if dom.size > subset_cap:
        raise ValidationError("size_cap_exceeded", f"cofinal check capped at {subset_cap} elements",
                              cap=subset_cap, size=dom.size)
    above_dom = _above_masks(dom)
    above_cod = _above_masks(cod)
    for mask in range(1, 1 << dom.size):
        if not subset_cofinal(dom, mask, above_dom):
            continue
        image = 0
        for x in range(dom.size):
            if mask >> x & 1:
                image |= 1 << g[x]
        if not subset_cofinal(cod, image, above_cod):
            return MapVerdict(False, tuple(x for x in range(dom.size) if mask >> x & 1))
    return MapVerdict(True)


# --- generated (countable) preorders ---------------------------------------

@dataclass
class GeneratedPreorder:
    name: str
    enumerate_fn: Callable[[int], Any]
    leq: Callable[[Any, Any], bool]
    upper_bound: Callable[[Any, Any], Any]
    globally_bounded: bool

    def prefix(self, n: int) -> list[Any]:
        return [self.enumerate_fn(i) for i in range(n)]

    def checked_upper_bound(self, x, y):
        u = self.upper_bound(x, y)
        if not (self.leq(x, u) and self.leq(y, u)):
            raise ValidationError("oracle_failure",
                                  f"upper_bound({x!r}, {y!r}) = {u!r} does not dominate both", x=x, y=y, value=u)
        return u


def omega() -> GeneratedPreorder:
    return GeneratedPreorder("omega", lambda i: i, lambda x, y: x <= y, max, globally_bounded=False)


def _cantor(i: int) -> tuple[int, int]:
    d = 0
    while (d + 1) * (d + 2) // 2 <= i:
        d += 1
    r = i - d * (d + 1) // 2
    return (r, d - r)


def omega_squared() -> GeneratedPreorder:
    return GeneratedPreorder(
        "omega2",
        _cantor,
        lambda x, y: x[0] <= y[0] and x[1] <= y[1],
        lambda x, y: (max(x[0], y[0]), max(x[1], y[1])),
        globally_bounded=False,
    )


@dataclass
class CompanionResult:
    """A prefix-certified cofinal companion: ``g`` on the enumerated codomain
    prefix together with the checked implication f(a) <= b  =>  a <= g(b)."""

    g: list[Any]
    implication_ok: bool
    checked_pairs: int
    warnings: list[str] = field(default_factory=list)


def cofinal_companion(f: Callable[[Any], Any], a: GeneratedPreorder, b: GeneratedPreorder,
                      n: int) -> CompanionResult:
    """Build ``g(b)`` as the enumeration-order fold of upper bounds over the
    fiber ``{x : f(x) <= b}`` and check the defining implication on every
    prefix pair."""
    a_prefix = a.prefix(n)
    b_prefix = b.prefix(n)
    warnings: list[str] = []
    g: list[Any] = []
    for bv in b_prefix:
        fiber = [x for x in a_prefix if b.leq(f(x), bv)]
        if not fiber:
            g.append(a_prefix[0])
            continue
        ub = fiber[0]
        for x in fiber[1:]:
            ub = a.checked_upper_bound(ub, x)
        for x in fiber:
            if not a.leq(x, ub):
                raise ValidationError("unbounded_fiber",
                                      f"fiber of {bv!r} is not dominated by the folded upper bound", b=bv)
        g.append(ub)
        if len(fiber) == len(a_prefix):
            warnings.append(
                f"fiber of {bv!r} is the whole prefix; the unboundedness hypothesis is untestable at this scale"
            )
    checked = 0
    for i, x in enumerate(a_prefix):
        for j, bv in enumerate(b_prefix):
            if b.leq(f(x), bv):
                checked += 1
                if not a.leq(x, g[j]):
                    raise ValidationError("implication_fails",
                                          f"f({x!r}) <= {bv!r} but not {x!r} <= g({bv!r})", x=x, y=bv)
    return CompanionResult(g, True, checked, warnings)


@dataclass
class MonotonizationTrace:
    """The data produced by the monotonization rounds.

    ``s`` is the strictly increasing spine, ``big_s[i]`` the block of prefix
    elements assigned at round ``i``, ``j`` the indices of the enumeration
    elements that seeded each round, ``b`` the non-decreasing image spine and
    ``fhat`` the resulting block-constant map on the processed prefix.
    """

    prefix: list[Any]
    s: list[Any]
    big_s: list[tuple[Any, ...]]
    j: list[int]
    b: list[Any]
    fhat: dict[Any, Any]
    rounds: int


def monotonize(f: Callable[[Any], Any], a: GeneratedPreorder, b: GeneratedPreorder,
               steps: int, prefix_size: int | None = None) -> MonotonizationTrace:
    """Run the inductive block construction that turns an arbitrary map into
    a block-constant monotone one, for ``steps`` rounds over the enumerated
    prefix."""
    if a.globally_bounded:
        raise ValidationError("globally_bounded_input",
                              "the construction requires a preorder declared unbounded")
    size = prefix_size if prefix_size is not None else steps
    prefix = a.prefix(size)
    assigned: dict[int, int] = {}  # prefix position -> round index
    s: list[Any] = []
    big_s: list[tuple[Any, ...]] = []
    j: list[int] = []
    b_spine: list[Any] = []
    fhat: dict[Any, Any] = {}

    for n in range(steps):
        jn = next((i for i in range(len(prefix)) if i not in assigned), None)
        if jn is None:
            break
        j.append(jn)
        if n == 0:
            sn = prefix[jn]
        else:
            sn = a.checked_upper_bound(s[-1], prefix[jn])
        s.append(sn)
        block = tuple(i for i in range(len(prefix)) if i not in assigned and a.leq(prefix[i], sn))
        for i in block:
            assigned[i] = n
        big_s.append(tuple(prefix[i] for i in block))
        if n == 0:
            bn = f(sn)
        else:
            bn = b.checked_upper_bound(b_spine[-1], f(sn))
        b_spine.append(bn)
        for i in block:
            fhat[prefix[i]] = bn
    return MonotonizationTrace(prefix, s, big_s, j, b_spine, fhat, len(s))


@dataclass
class TraceCheck:
    s_strictly_increasing: bool
    blocks_partition_prefix: bool
    blocks_respect_order: bool
    b_non_decreasing: bool
    fhat_monotone: bool

    @property
    def ok(self) -> bool:
        return (self.s_strictly_increasing and self.blocks_partition_prefix
                and self.blocks_respect_order and self.b_non_decreasing and self.fhat_monotone)


def verify_trace(trace: MonotonizationTrace, a: GeneratedPreorder, b: GeneratedPreorder) -> TraceCheck:
    """Re-check the trace invariants literally, independent of how the trace
    was built."""
    leq_a, leq_b = a.leq, b.leq
    s_incr = all(
        leq_a(trace.s[i], trace.s[i + 1]) and not leq_a(trace.s[i + 1], trace.s[i])
        for i in range(len(trace.s) - 1)
    )
    seen: list[Any] = []
    disjoint = True
    for block in trace.big_s:
        for x in block:
            if x in seen:
                disjoint = False
            seen.append(x)
    covers = disjoint and sorted(map(repr, seen)) == sorted(map(repr, trace.fhat.keys()))
    respects = True
    for i, bi in enumerate(trace.big_s):
        for jdx, bj in enumerate(trace.big_s):
            for x in bi:
                for y in bj:
                    if leq_a(x, y) and i > jdx:
                        respects = False
    b_nondec = all(leq_b(trace.b[i], trace.b[i + 1]) for i in range(len(trace.b) - 1))
    processed = list(trace.fhat.keys())
    monotone = all(
        leq_b(trace.fhat[x], trace.fhat[y])
        for x in processed for y in processed
        if leq_a(x, y)
    )
    return TraceCheck(s_incr, covers, respects, b_nondec, monotone)


def locate_block(x, trace: MonotonizationTrace, a: GeneratedPreorder) -> int | None:
    """Membership procedure: the least round index ``i`` with ``x <= s_i``."""
    for i, si in enumerate(trace.s):
        if a.leq(x, si):
            return i
    return None
