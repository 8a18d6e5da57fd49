"""Buchberger engine and the ideal-theoretic toolbox built on it.

Provides reduced Groebner bases, normal forms, ideal membership and
equality, radical membership through the slack-variable trick, colon and
intersection via elimination, and the combinatorial Krull dimension of a
quotient read off the initial ideal.
"""

from __future__ import annotations

import hashlib
import heapq
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import (
    BlockOrder,
    GrevLex,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    poly_text,
    tvar,
)


class BadColon(Exception):
    """Raised when the divisor ideal of a colon is zero."""


class BudgetExceeded(Exception):
    """A Groebner run ran over its resource budget; carries partial stats."""

    def __init__(self, message: str, stats: dict):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class Budget:
    """Per-run resource caps so CI failures stay diagnosable."""

    max_pairs: int = 200_000
    max_terms: int = 2_000_000
    wall_seconds: float = 600.0


DEFAULT_BUDGET = Budget()

#: Krull dimension reported for the unit ideal (empty variety).
EMPTY_VARIETY_DIMENSION = -1


@dataclass
class RunTrace:
    """Machine-readable record of one Groebner run."""

    input_hash: str
    order: str
    pairs: int = 0
    max_terms: int = 0
    wall_seconds: float = 0.0
    verdict: object = None

    def as_dict(self, timings: bool = True) -> dict:
        d = {
            "input_hash": self.input_hash,
            "order": self.order,
            "pairs": self.pairs,
            "max_terms": self.max_terms,
            "verdict": self.verdict,
        }
        if timings:
            d["wall_seconds"] = round(self.wall_seconds, 6)
        return d


class IdealBasis:
    """A generating set: nonzero, deduplicated up to scalar multiple."""

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial]):
        gens = []
        seen = set()
        for g in generators:
            if g.ring.vars != ring.vars or g.ring.field != ring.field:
                g = g.convert(ring)
            if not g:
                continue
            key = g.monic()._terms
            if key in seen:
                continue
            seen.add(key)
            gens.append(g)
        if not gens:
            raise ValueError("an ideal basis needs at least one nonzero generator")
        self.ring = ring
        self.generators = tuple(gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"IdealBasis({len(self.generators)} gens over {self.ring.field.name})"


class GroebnerBasis:
    """A reduced Groebner basis with its order and run statistics."""

    def __init__(self, ring: PolynomialRing, elements: Sequence[Polynomial], trace: RunTrace):
        self.ring = ring
        self.elements = tuple(elements)
        self.order = ring.order
        self.reduced = True
        self.trace = trace

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, {self.order.kind})"


def _input_hash(gens: Sequence[Polynomial], order: MonomialOrder) -> str:
    h = hashlib.sha256()
    h.update(order.kind.encode())
    for g in sorted(poly_text(p) for p in gens):
        h.update(g.encode())
        h.update(b"\n")
    return h.hexdigest()[:16]


# ---------------------------------------------------------------------------
# reduction


def _reduce_terms(f: dict, basis: list, ring: PolynomialRing, trace: RunTrace | None = None):
    """Full normal form of the term-dict f modulo basis entries.

    basis entries are (lm_exps, terms_tuple) with terms monic and sorted.
    Returns a new term dict.  Uses a lazy max-heap over the order's negkey.
    """
    field = ring.field
    zero = field.zero
    negkey = ring.order.negkey
    heap = [(negkey(e), e) for e in f]
    heapq.heapify(heap)
    out: dict = {}
    nvars = len(ring.vars)
    while heap:
        _, e = heapq.heappop(heap)
        c = f.get(e, zero)
        if c == zero:
            continue
        reducer = None
        for lm, terms in basis:
            ok = True
            for a, b in zip(lm, e):
                if a > b:
                    ok = False
                    break
            if ok:
                reducer = (lm, terms)
                break
        if reducer is None:
            out[e] = c
            del f[e]
            continue
        lm, terms = reducer
        shift = tuple(b - a for a, b in zip(lm, e))
        # terms are monic: coefficient of lm is 1
        del f[e]
        for te, tc in terms[1:]:
            me = tuple(a + b for a, b in zip(te, shift))
            old = f.get(me, zero)
            new = field.sub(old, field.mul(c, tc))
            if new == zero:
                f.pop(me, None)
            else:
                if me not in f:
                    heapq.heappush(heap, (negkey(me), me))
                f[me] = new
        if trace is not None and len(f) > trace.max_terms:
            trace.max_terms = len(f)
    return out


def _poly_from_dict(ring: PolynomialRing, d: dict) -> Polynomial:
    return ring._from_dict(d, sort=True)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by G; zero iff f lies in the ideal."""
    if f.ring.vars != G.ring.vars or f.ring.field != G.ring.field:
        f = f.convert(G.ring)
    elif f.ring.order is not G.ring.order:
        f = f.convert(G.ring)
    basis = [(g._terms[0][0], g._terms) for g in G.elements]
    rem = _reduce_terms(dict(f._terms), basis, G.ring)
    return _poly_from_dict(G.ring, rem)


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(
    I: IdealBasis | Sequence[Polynomial],
    order: MonomialOrder | None = None,
    budget: Budget | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by I.

    Classic Buchberger with the coprime and chain pair-discarding criteria
    and degree-graded normal pair selection.  The reduced basis is unique
    for a fixed order, so permuting the input cannot change the output.
    Short-circuits as soon as the ideal is seen to contain a unit.
    """
    if isinstance(I, IdealBasis):
        ring = I.ring
        gens = list(I.generators)
    else:
        gens = list(I)
        if not gens:
            raise ValueError("empty generating set")
        ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
        gens = [g.convert(ring) for g in gens]
    budget = budget or DEFAULT_BUDGET
    trace = RunTrace(_input_hash(gens, ring.order), ring.order.kind)
    start = time.monotonic()

    field = ring.field
    okey = ring.order.key

    G: list[Polynomial] = []
    lms: list[tuple[int, ...]] = []

    def basis_view():
        return [(g._terms[0][0], g._terms) for g in G]

    def add_element(h: Polynomial):
        G.append(h)
        lms.append(h._terms[0][0])

    # seed with the (monic) inter-reduced input
    for g in sorted((g.monic() for g in gens if g), key=lambda p: okey(p._terms[0][0])):
        rem = _reduce_terms(dict(g._terms), basis_view(), ring, trace)
        h = _poly_from_dict(ring, rem)
        if h:
            add_element(h.monic())
    if any(g.is_constant() for g in G):
        trace.wall_seconds = time.monotonic() - start
        return GroebnerBasis(ring, [ring.one], trace)

    pairs: list[tuple[tuple, tuple[int, int]]] = []
    removed: set[tuple[int, int]] = set()

    def lcm_exps(i, j):
        return tuple(max(a, b) for a, b in zip(lms[i], lms[j]))

    def push_pair(i, j):
        lcm = lcm_exps(i, j)
        heapq.heappush(pairs, ((sum(lcm), okey(lcm)), (i, j)))

    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            push_pair(i, j)

    unit = None
    while pairs:
        if trace.pairs >= budget.max_pairs or trace.max_terms >= budget.max_terms:
            raise BudgetExceeded("pair/term budget exhausted", trace.as_dict())
        if time.monotonic() - start > budget.wall_seconds:
            raise BudgetExceeded("wall-clock budget exhausted", trace.as_dict())
        _, (i, j) = heapq.heappop(pairs)
        if (i, j) in removed:
            continue
        removed.add((i, j))
        trace.pairs += 1
        li, lj = lms[i], lms[j]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        # coprime criterion
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        # chain criterion: some k with lm_k | lcm and both sibling pairs done
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if all(a <= b for a, b in zip(lms[k], lcm)):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in removed and pjk in removed:
                    skip = True
                    break
        if skip:
            continue
        # S-polynomial (both elements monic)
        fi, fj = G[i], G[j]
        si = tuple(c - a for a, c in zip(li, lcm))
        sj = tuple(c - a for a, c in zip(lj, lcm))
        s: dict = {}
        for e, c in fi._terms:
            s[tuple(a + b for a, b in zip(e, si))] = c
        for e, c in fj._terms:
            me = tuple(a + b for a, b in zip(e, sj))
            old = s.get(me, field.zero)
            new = field.sub(old, c)
            if new == field.zero:
                s.pop(me, None)
            else:
                s[me] = new
        rem = _reduce_terms(s, basis_view(), ring, trace)
        h = _poly_from_dict(ring, rem)
        if not h:
            continue
        h = h.monic()
        if h.is_constant():
            unit = h
            break
        t = len(G)
        add_element(h)
        for k in range(t):
            push_pair(k, t)

    if unit is not None:
        elements = [ring.one]
    else:
        elements = _interreduce(ring, G, trace)
    trace.wall_seconds = time.monotonic() - start
    return GroebnerBasis(ring, elements, trace)


def _interreduce(ring: PolynomialRing, G: list[Polynomial], trace: RunTrace) -> list[Polynomial]:
    """Minimalize and tail-reduce a Groebner basis; sort by leading monomial."""
    okey = ring.order.key
    # minimal: drop g whose lm is divisible by another's lm
    keep: list[Polynomial] = []
    lms = [g._terms[0][0] for g in G]
    for idx, g in enumerate(G):
        lm = lms[idx]
        divisible = False
        for jdx, other_lm in enumerate(lms):
            if jdx == idx:
                continue
            if all(a <= b for a, b in zip(other_lm, lm)) and (
                other_lm != lm or jdx < idx
            ):
                divisible = True
                break
        if not divisible:
            keep.append(g)
    # reduce each element modulo the others
    reduced: list[Polynomial] = []
    for idx, g in enumerate(keep):
        others = [(h._terms[0][0], h._terms) for jdx, h in enumerate(keep) if jdx != idx]
        rem = _reduce_terms(dict(g._terms), others, ring, trace)
        h = _poly_from_dict(ring, rem)
        if h:
            reduced.append(h.monic())
    reduced.sort(key=lambda p: okey(p._terms[0][0]))
    return reduced


# ---------------------------------------------------------------------------
# membership, equality, radical membership


def in_ideal(f: Polynomial, G: GroebnerBasis) -> bool:
    return not normal_form(f, G)


def ideal_equal(I: IdealBasis, J: IdealBasis, budget: Budget | None = None) -> bool:
    """Literal equality of ideals via mutual normal-form reduction."""
    GI = buchberger(I, budget=budget)
    GJ = buchberger(J, budget=budget)
    return all(in_ideal(g, GJ) for g in I.generators) and all(
        in_ideal(g, GI) for g in J.generators
    )


def _extended_ring(ring: PolynomialRing, order: MonomialOrder, front: bool) -> PolynomialRing:
    """Adjoin a fresh slack variable below (front) or above everything."""
    k = 0
    while tvar(k) in ring.index:
        k += 1
    aux = tvar(k)
    vs = (aux, *ring.vars) if front else (*ring.vars, aux)
    ext = PolynomialRing(ring.field, vs, order)
    return ext, aux


def radical_membership(
    f: Polynomial,
    I: IdealBasis,
    budget: Budget | None = None,
    with_trace: bool = False,
):
    """Whether f lies in the radical of I.

    Decided by testing 1 in I + (1 - t*f) in the ring extended by a fresh
    slack t (placed below every other variable); the Groebner run uses
    grevlex, as unit detection does not depend on the order.
    """
    ext, aux = _extended_ring(I.ring, GrevLex(), front=True)
    gens = [g.convert(ext) for g in I.generators]
    gens.append(ext.one - ext.var(aux) * f.convert(ext))
    G = buchberger(gens, budget=budget)
    verdict = G.is_unit()
    G.trace.verdict = verdict
    if with_trace:
        return verdict, G.trace
    return verdict


# ---------------------------------------------------------------------------
# intersection and colon via elimination


def _eliminate_aux(G: GroebnerBasis, ext: PolynomialRing, base: PolynomialRing, aux_index: int):
    """Aux-free elements of an elimination Groebner basis, in the base ring."""
    out = []
    for g in G.elements:
        if all(e[aux_index] == 0 for e, _ in g._terms):
            d = {}
            for e, c in g._terms:
                d[tuple(x for i, x in enumerate(e) if i != aux_index)] = c
            out.append(base._from_dict(d, sort=True))
    return out


def intersect_ideals(I: IdealBasis, J: IdealBasis, budget: Budget | None = None) -> IdealBasis:
    """I cap J = (u*I + (1-u)*J) cap base ring, by block elimination."""
    base = I.ring
    ext, aux = _extended_ring(base, GrevLex(), front=False)
    aux_index = ext.index[aux]
    elim = BlockOrder([[aux_index], [i for i in range(len(ext.vars)) if i != aux_index]])
    ext = ext.with_order(elim)
    u = ext.var(aux)
    gens = [u * g.convert(ext) for g in I.generators]
    one_minus_u = ext.one - u
    gens += [one_minus_u * g.convert(ext) for g in J.generators]
    G = buchberger(gens, budget=budget)
    inter = _eliminate_aux(G, ext, base, aux_index)
    if not inter:
        raise ValueError("intersection of nonzero ideals came out zero")
    return IdealBasis(base, inter)


def colon_ideal(I: IdealBasis, J, budget: Budget | None = None) -> IdealBasis:
    """The colon I : J, as the intersection over J's generators of I : g.

    Each single colon is computed as (I cap (g)) / g, the intersection via
    elimination of an auxiliary scalar and the division exact.  J may be an
    IdealBasis or a plain sequence of polynomials.
    """
    divisors = list(J.generators) if isinstance(J, IdealBasis) else [g for g in J if g]
    if not divisors:
        raise BadColon("colon by the zero ideal")
    if not isinstance(J, IdealBasis):
        J = IdealBasis(I.ring, divisors)
    partial: IdealBasis | None = None
    for g in J.generators:
        inter = intersect_ideals(I, IdealBasis(I.ring, [g]), budget=budget)
        quo = IdealBasis(I.ring, [h.exact_div(g) for h in inter.generators])
        partial = quo if partial is None else intersect_ideals(partial, quo, budget=budget)
    return partial


# ---------------------------------------------------------------------------
# quotient dimension


def quotient_dimension(
    I: IdealBasis,
    order: MonomialOrder | None = None,
    budget: Budget | None = None,
) -> int:
    """Krull dimension of ring/I from the initial ideal of a reduced basis.

    dim = max |U| over variable subsets U containing the support of no
    leading monomial; equivalently nvars minus a minimum hitting set of the
    supports.  The unit ideal reports EMPTY_VARIETY_DIMENSION (-1).
    """
    G = buchberger(I, order=order or GrevLex(), budget=budget)
    if G.is_unit():
        return EMPTY_VARIETY_DIMENSION
    nvars = len(G.ring.vars)
    supports = sorted(
        {frozenset(i for i, e in enumerate(g._terms[0][0]) if e) for g in G.elements},
        key=len,
    )
    # strip supersets: hitting a subset hits its supersets
    minimal: list[frozenset[int]] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    best = nvars  # size of the best hitting set found so far

    def search(idx: int, chosen: frozenset[int], size: int):
        nonlocal best
        if size >= best:
            return
        while idx < len(minimal) and minimal[idx] & chosen:
            idx += 1
        if idx == len(minimal):
            best = size
            return
        for v in sorted(minimal[idx]):
            search(idx + 1, chosen | {v}, size + 1)

    search(0, frozenset(), 0)
    return nvars - best
