"""Structural analysis of translatable tables.

Covers the idempotent set and its closed forms, the splitting of a
left-cancellative translatable semigroup into disjoint cyclic groups, the
explicit isomorphisms between members of one family, recognition of cyclic
group tables, and one-sided ideals with their semiprime verdicts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    BoundError,
    CayleyTable,
    InvalidInputError,
    KSequence,
    Ordering,
    PreconditionError,
    VerificationError,
    mod_rep,
)
from .properties import (
    check,
    idempotent_elements,
    left_neutral_elements,
    semigroup_criterion,
)
from .translation import table_from_sequence


def idempotent_set(table: CayleyTable) -> frozenset[int]:
    """Elements with i*i = i, read off the diagonal."""
    return frozenset(idempotent_elements(table))


def idempotent_set_formula(seq: KSequence) -> frozenset[int]:
    """Closed form {i : [k(i + a_k)] = 0} for the idempotents.

    Matches the diagonal scan on every left-cancellative translatable
    semigroup; on other tables it is just a formula.
    """
    n, k = seq.n, seq.k
    ak = seq.seq[seq.k - 1]
    return frozenset(i for i in range(1, n + 1) if mod_rep(k * (i + ak), n) == n)


def left_unitary_idempotents(n: int, k: int) -> frozenset[int]:
    """Idempotents {[i + k(i-1)] : i} of the table whose left neutral is 1."""
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"step must satisfy 1 <= k <= n-1, got k={k} for n={n}")
    return frozenset(mod_rep(i + k * (i - 1), n) for i in range(1, n + 1))


@dataclass(frozen=True)
class Decomposition:
    """A semigroup split into t disjoint cyclic groups of order m.

    Components are listed by their idempotent in increasing order; the
    generator at index p generates the component at index p.
    """

    idempotents: frozenset[int]
    m: int
    t: int
    components: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]


def _least_multiplier(base: int, n: int) -> int:
    """Least positive m with [m * base] = 0 modulo n."""
    for m in range(1, n + 1):
        if mod_rep(m * base, n) == n:
            return m
    raise VerificationError(f"no multiple of {base} vanishes modulo {n}")


def _verify_component_group(table: CayleyTable, comp: tuple[int, ...], e: int, gen: int) -> None:
    members = set(comp)
    if e not in members or gen not in members:
        raise VerificationError(f"component {comp} misses its idempotent {e} or generator {gen}")
    for x in comp:
        for y in comp:
            if table.entry(x, y) not in members:
                raise VerificationError(f"component {comp} is not closed: {x}*{y} escapes")
    for x in comp:
        for y in comp:
            for z in comp:
                if table.entry(table.entry(x, y), z) != table.entry(x, table.entry(y, z)):
                    raise VerificationError(f"component {comp} is not associative at ({x},{y},{z})")
    for x in comp:
        if table.entry(e, x) != x or table.entry(x, e) != x:
            raise VerificationError(f"{e} is not neutral in component {comp}")
    for x in comp:
        if not any(table.entry(x, y) == e and table.entry(y, x) == e for y in comp):
            raise VerificationError(f"{x} has no inverse in component {comp}")
    powers = set()
    p = gen
    for _ in range(len(comp)):
        powers.add(p)
        p = table.entry(p, gen)
    if powers != members or p != gen:
        raise VerificationError(f"{gen} does not generate component {comp}")


def decompose(table: CayleyTable, seq: KSequence) -> Decomposition:
    """Split a left-cancellative translatable semigroup into cyclic groups.

    m is the least positive solution of [mk] = 0 and t of [tm] = 0; the
    components are Q*i over the idempotents i.  Everything the split
    promises is re-checked directly: the closed form for the idempotent
    set, the identities m = n/gcd(n,k) and t = gcd(n,k) = |E(Q)|, that the
    idempotents are exactly the left neutral elements and multiply as a
    right-zero band, and that each component is a cyclic group of order m
    generated by [i - k].
    """
    if not seq.is_permutation() or not semigroup_criterion(seq):
        raise PreconditionError(
            "decompose needs a sequence passing the semigroup criterion",
            prerequisite="semigroup-criterion",
        )
    if table != table_from_sequence(seq):
        raise PreconditionError(
            "table is not generated by the given sequence", prerequisite="matching-table"
        )
    n, k = seq.n, seq.k
    idems = idempotent_elements(table)
    if frozenset(idems) != idempotent_set_formula(seq):
        raise VerificationError("diagonal idempotents disagree with the closed form")
    if idems != left_neutral_elements(table):
        raise VerificationError("idempotents are not exactly the left neutral elements")
    for e in idems:
        for f in idems:
            if table.entry(e, f) != f:
                raise VerificationError(f"idempotents are not a right-zero band: {e}*{f}")
    m = _least_multiplier(k, n)
    t = _least_multiplier(m, n)
    g = math.gcd(n, k)
    if m != n // g or t != g:
        raise VerificationError(f"least solutions m={m}, t={t} disagree with gcd data {n // g}, {g}")
    if t != len(idems):
        raise VerificationError(f"component count {t} differs from {len(idems)} idempotents")
    components = []
    generators = []
    covered: set[int] = set()
    for e in idems:
        comp = tuple(sorted({table.entry(x, e) for x in range(1, n + 1)}))
        if len(comp) != m:
            raise VerificationError(f"component of {e} has size {len(comp)}, expected {m}")
        if covered & set(comp):
            raise VerificationError(f"component of {e} overlaps an earlier one")
        covered.update(comp)
        gen = mod_rep(e - k, n)
        _verify_component_group(table, comp, e, gen)
        components.append(comp)
        generators.append(gen)
    if len(covered) != n:
        raise VerificationError("components do not cover the whole carrier")
    return Decomposition(frozenset(idems), m, t, tuple(components), tuple(generators))


@dataclass(frozen=True)
class Isomorphism:
    """A bijection on 1..n, with mapping[x-1] the image of x."""

    mapping: tuple[int, ...]
    verified: bool

    def apply(self, x: int) -> int:
        if not 1 <= x <= len(self.mapping):
            raise IndexError(f"{x} outside 1..{len(self.mapping)}")
        return self.mapping[x - 1]


def _diagonal_ordering(table: CayleyTable, who: str) -> Ordering:
    diag = tuple(table.rows[r][r] for r in range(table.n))
    if sorted(diag) != list(range(1, table.n + 1)):
        raise PreconditionError(
            f"{who} is not an idempotent presentation: its diagonal is not a permutation",
            prerequisite="idempotent",
        )
    return Ordering(diag)


def iso_idempotent(seq_q: KSequence, seq_s: KSequence) -> Isomorphism:
    """Isomorphism between two idempotent presentations of equal order and step.

    The diagonal of an idempotent presentation lists the element ordering,
    so position p of the first ordering is sent to position p of the
    second.  The map is verified cell by cell before being returned.
    """
    if (seq_q.n, seq_q.k) != (seq_s.n, seq_s.k):
        raise PreconditionError(
            f"presentations disagree: ({seq_q.n},{seq_q.k}) vs ({seq_s.n},{seq_s.k})",
            prerequisite="matching-order-and-step",
        )
    a = table_from_sequence(seq_q)
    b = table_from_sequence(seq_s)
    cq = _diagonal_ordering(a, "first sequence")
    cs = _diagonal_ordering(b, "second sequence")
    phi = cs.compose(cq.inverse())
    mapping = tuple(phi.apply(x) for x in range(1, seq_q.n + 1))
    for r in range(seq_q.n):
        for s in range(seq_q.n):
            if mapping[a.rows[r][s] - 1] != b.rows[r][s]:
                raise VerificationError(
                    f"diagonal map fails at position ({r + 1},{s + 1})"
                )
    return Isomorphism(mapping, True)


def _unitary_reordering(seq: KSequence) -> Ordering:
    """Theorem ordering b_s = [-a_k - k + s - 2] turning the table left unitary."""
    n, k = seq.n, seq.k
    v = seq.seq[k - 1]
    return Ordering(tuple(mod_rep(-v - k + s - 2, n) for s in range(1, n + 1)))


def iso_left_unitary(seq_q: KSequence, seq_g: KSequence) -> Isomorphism:
    """Isomorphism between two left-cancellative translatable semigroups.

    Both orders and steps must agree and both sequences must pass the
    semigroup criterion.  Each table is brought to its left-unitary
    presentation by the reordering b_s = [-a_k - k + s - 2]; matching
    positions then defines the map x -> [x + a_k - a_k'], verified on all
    products.
    """
    if (seq_q.n, seq_q.k) != (seq_g.n, seq_g.k):
        raise PreconditionError(
            f"presentations disagree: ({seq_q.n},{seq_q.k}) vs ({seq_g.n},{seq_g.k})",
            prerequisite="matching-order-and-step",
        )
    for who, seq in (("first", seq_q), ("second", seq_g)):
        if not seq.is_permutation() or not semigroup_criterion(seq):
            raise PreconditionError(
                f"{who} sequence does not pass the semigroup criterion",
                prerequisite="semigroup-criterion",
            )
    n = seq_q.n
    tq = table_from_sequence(seq_q)
    tg = table_from_sequence(seq_g)
    bq = _unitary_reordering(seq_q)
    bg = _unitary_reordering(seq_g)
    for table, b in ((tq, bq), (tg, bg)):
        first = b.apply(1)
        for s in range(1, n + 1):
            if table.entry(first, b.apply(s)) != b.apply(s):
                raise VerificationError("reordered table has no left neutral in front")
    phi = bg.compose(bq.inverse())
    mapping = tuple(phi.apply(x) for x in range(1, n + 1))
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if mapping[tq.entry(x, y) - 1] != tg.entry(mapping[x - 1], mapping[y - 1]):
                raise VerificationError(f"unitary map fails on the product {x}*{y}")
    return Isomorphism(mapping, True)


def cyclic_table(n: int) -> CayleyTable:
    """The table of addition on 1..n with neutral 1: i*j = [i + j - 1]."""
    if n < 1:
        raise InvalidInputError(f"order must be at least 1, got {n}")
    return CayleyTable(
        n, tuple(tuple(mod_rep(i + j - 1, n) for j in range(1, n + 1)) for i in range(1, n + 1))
    )


def _neutral_element(table: CayleyTable) -> int | None:
    n = table.n
    for e in range(1, n + 1):
        if table.row(e) == tuple(range(1, n + 1)) and table.column(e) == tuple(range(1, n + 1)):
            return e
    return None


def _element_order(table: CayleyTable, g: int, e: int) -> int:
    p = g
    steps = 1
    while p != e:
        p = table.entry(p, g)
        steps += 1
        if steps > table.n:
            raise VerificationError(f"powers of {g} never reach the neutral {e}")
    return steps


def iso_to_cyclic(table: CayleyTable) -> Isomorphism | None:
    """Map a cyclic group table onto the canonical [i + j - 1] table.

    Returns None when the table is not a group or has no element of order
    n.  Otherwise the least such element g is sent to 2, its powers follow,
    and the verified isomorphism is returned.
    """
    n = table.n
    ok, _ = check(table, "associative")
    if not ok:
        return None
    e = _neutral_element(table)
    if e is None:
        return None
    for x in range(1, n + 1):
        if not any(table.entry(x, y) == e and table.entry(y, x) == e for y in range(1, n + 1)):
            return None
    generator = None
    for g in range(1, n + 1):
        if _element_order(table, g, e) == n:
            generator = g
            break
    if generator is None:
        return None
    mapping = [0] * n
    p = e
    for m in range(n):
        mapping[p - 1] = mod_rep(m + 1, n)
        p = table.entry(p, generator)
    target = cyclic_table(n)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if mapping[table.entry(x, y) - 1] != target.entry(mapping[x - 1], mapping[y - 1]):
                raise VerificationError(f"cyclic map fails on the product {x}*{y}")
    return Isomorphism(tuple(mapping), True)


@dataclass(frozen=True)
class Ideal:
    """A one-sided ideal with its semiprime verdict."""

    side: str
    elements: tuple[int, ...]
    semiprime: bool


DEFAULT_IDEAL_BOUND = 14


def principal_ideal(table: CayleyTable, x: int, side: str) -> tuple[int, ...]:
    """Smallest one-sided ideal containing x: {x} with Q*x or x*Q."""
    n = table.n
    if side == "left":
        members = {x} | {table.entry(y, x) for y in range(1, n + 1)}
    elif side == "right":
        members = {x} | {table.entry(x, y) for y in range(1, n + 1)}
    else:
        raise InvalidInputError(f"side must be 'left' or 'right', got {side!r}")
    return tuple(sorted(members))


def _is_semiprime(table: CayleyTable, members: set[int]) -> bool:
    return all(x in members for x in range(1, table.n + 1) if table.entry(x, x) in members)


def ideals(table: CayleyTable, side: str, bound: int = DEFAULT_IDEAL_BOUND) -> list[Ideal]:
    """All one-sided ideals of an associative table, smallest first.

    Every ideal of a semigroup is a union of principal ideals, so the
    distinct principal ideals are collected and all unions of them are
    deduplicated.  The order bound keeps the subset stage tractable.
    """
    if side not in ("left", "right"):
        raise InvalidInputError(f"side must be 'left' or 'right', got {side!r}")
    n = table.n
    if n > bound:
        raise BoundError(f"ideal enumeration over order {n} exceeds the bound {bound}")
    ok, witness = check(table, "associative")
    if not ok:
        raise PreconditionError(
            f"ideal enumeration needs an associative table; fails at {witness.elements}",
            prerequisite="associative",
        )
    principals = sorted({principal_ideal(table, x, side) for x in range(1, n + 1)})
    seen: set[frozenset[int]] = set()
    for count in range(1, len(principals) + 1):
        for chosen in itertools.combinations(principals, count):
            union = frozenset(x for p in chosen for x in p)
            seen.add(union)
    out = []
    for members in sorted(seen, key=lambda f: (len(f), tuple(sorted(f)))):
        out.append(Ideal(side, tuple(sorted(members)), _is_semiprime(table, set(members))))
    return out
