"""Exhaustive ground-truth solvers over small vocabularies.

Semantics here is decided purely by truth tables: a set of assignments is a
bitmask integer (bit r set iff row r satisfies), formulas evaluate to masks
bit-parallel, and candidate output triples are enumerated in increasing total
size.  The enumeration is organized as a coverage-directed DFS (a clause is
useful exactly when it excludes a still-alive forbidden assignment) with
exact, memoized min-cover lower bounds; every surviving candidate is
re-checked against the problem's raw conditions before being collected, so
pruning can only ever lose candidates, never admit wrong ones.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cnf import (
    CNF_BOTTOM,
    CNF_TOP,
    Clause,
    CnfFormula,
    Literal,
    PartialAssignment,
    canonical_clauses,
)
from .formula import Atom, Bottom, Formula, And, Not, Or, Symbol, atoms
from .problem import ProblemInstance

__all__ = [
    "HARD_VOCAB_CAP",
    "OracleBudgetError",
    "EnumerationBudget",
    "FlipSet",
    "OracleResult",
    "enumerate_cnf",
    "oracle_solve",
    "oracle_min_flip",
    "truth_mask",
    "canonical_clauses",
]

HARD_VOCAB_CAP = 12
_INF = 10**9


class OracleBudgetError(Exception):
    """Budget exhausted before the question was settled; distinct from 'error'."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_total_size: int | None = None
    max_vocab: int = HARD_VOCAB_CAP
    deadline: float | None = None  # seconds of wall clock

    def __post_init__(self) -> None:
        if not 0 <= self.max_vocab <= HARD_VOCAB_CAP:
            raise ValueError(f"max_vocab must be within 0..{HARD_VOCAB_CAP}")
        if self.max_total_size is not None and self.max_total_size < 0:
            raise ValueError("max_total_size must be non-negative")


@dataclass(frozen=True)
class FlipSet:
    """Literals of a full assignment whose duals produce the flipped assignment."""

    literals: tuple[Literal, ...]

    @property
    def cardinality(self) -> int:
        return len(self.literals)


Triple = tuple[CnfFormula, CnfFormula, CnfFormula]


@dataclass(frozen=True)
class OracleResult:
    status: str  # "ok" | "error"
    total_size: int | None
    chi_size: int | None
    optima: tuple[Triple, ...]

    @property
    def is_error(self) -> bool:
        return self.status == "error"

    def representative(self) -> Triple:
        """Least optimum in the canonical-form order (clause keys, positive first)."""
        return min(self.optima, key=lambda t: tuple(tuple(c.key for c in f.clauses) for f in t))

    def to_json_dict(self) -> dict:
        if self.is_error:
            return {
                "status": "error",
                "theta": None,
                "theta_prime": None,
                "chi": None,
                "total_size": None,
                "chi_size": None,
                "optimal": True,
                "verification": None,
                "all_optima": [],
            }
        theta, theta_prime, chi = self.representative()
        return {
            "status": "ok",
            "theta": str(theta),
            "theta_prime": str(theta_prime),
            "chi": str(chi),
            "total_size": self.total_size,
            "chi_size": self.chi_size,
            "optimal": True,
            "verification": None,
            "all_optima": [[str(f) for f in triple] for triple in self.optima],
        }


# --- truth-table machinery ----------------------------------------------------

def _column_masks(n: int) -> tuple[list[int], int]:
    rows = 1 << n
    full = (1 << rows) - 1
    cols = []
    for j in range(n):
        m = 0
        for r in range(rows):
            if (r >> j) & 1:
                m |= 1 << r
        cols.append(m)
    return cols, full


def _formula_mask(f: Formula, pos_by_id: dict[int, int], cols: Sequence[int], full: int) -> int:
    if isinstance(f, Bottom):
        return 0
    if isinstance(f, Atom):
        return cols[pos_by_id[f.symbol.id]]
    if isinstance(f, Not):
        return full ^ _formula_mask(f.operand, pos_by_id, cols, full)
    if isinstance(f, And):
        return _formula_mask(f.left, pos_by_id, cols, full) & _formula_mask(f.right, pos_by_id, cols, full)
    if isinstance(f, Or):
        return _formula_mask(f.left, pos_by_id, cols, full) | _formula_mask(f.right, pos_by_id, cols, full)
    raise TypeError(f"not a formula: {f!r}")


def _clause_mask(clause: Clause, pos_by_id: dict[int, int], cols: Sequence[int], full: int) -> int:
    m = 0
    for lit in clause.literals:
        col = cols[pos_by_id[lit.symbol.id]]
        m |= (full ^ col) if lit.negated else col
    return m


def truth_mask(item: Formula | CnfFormula | Clause, symbols: Sequence[Symbol]) -> int:
    """Bitmask of satisfying rows over the given symbol ordering."""
    pos_by_id = {sym.id: j for j, sym in enumerate(symbols)}
    cols, full = _column_masks(len(symbols))
    if isinstance(item, CnfFormula):
        m = full
        for cl in item.clauses:
            m &= _clause_mask(cl, pos_by_id, cols, full)
        return m
    if isinstance(item, Clause):
        return _clause_mask(item, pos_by_id, cols, full)
    return _formula_mask(item, pos_by_id, cols, full)


def enumerate_cnf(vocab: Sequence[Symbol], max_size: int) -> Iterator[CnfFormula]:
    """Every canonical tautology-free CNF with size <= max_size, exactly once.

    Order: non-decreasing size, then lexicographic on the clause sequence.
    TOP (empty CNF) and BOTTOM (bare empty clause) are the two size-0 forms;
    canonical CNFs never mix the empty clause with other clauses.
    """
    if len(vocab) > HARD_VOCAB_CAP:
        raise OracleBudgetError(f"vocabulary of {len(vocab)} exceeds the cap of {HARD_VOCAB_CAP}")
    if max_size < 0:
        return
    yield CNF_TOP
    yield CNF_BOTTOM
    pool = canonical_clauses(vocab, max_width=max_size if max_size < len(vocab) else None)
    sizes = [c.size for c in pool]

    def rec(start: int, remaining: int, acc: list[Clause]) -> Iterator[CnfFormula]:
        if remaining == 0:
            yield CnfFormula(tuple(acc))
            return
        for j in range(start, len(pool)):
            if sizes[j] <= remaining:
                acc.append(pool[j])
                yield from rec(j + 1, remaining - sizes[j], acc)
                acc.pop()

    for target in range(1, max_size + 1):
        yield from rec(0, target, [])


# --- oracle search --------------------------------------------------------------

class _Deadline:
    __slots__ = ("at", "ticks")

    def __init__(self, seconds: float | None) -> None:
        self.at = None if seconds is None else time.monotonic() + seconds
        self.ticks = 0

    def check(self) -> None:
        if self.at is None:
            return
        self.ticks += 1
        if self.ticks & 0x3FF == 0 and time.monotonic() > self.at:
            raise OracleBudgetError("oracle deadline exceeded")


class _TripleSearch:
    """Level-wise enumeration of candidate triples for one instance."""

    def __init__(
        self,
        kind: str,
        pool: list[Clause],
        masks: list[int],
        in_theta: list[bool],
        in_chi: list[bool],
        in_tp: list[bool],
        bot_theta: bool,
        bot_chi: bool,
        bot_tp: bool,
        cover1: int,
        cover2: int,
        full: int,
        m_s: int | None,
        t1m: int,
        t2m: int,
        terms: bool,
        deadline: _Deadline,
    ) -> None:
        self.kind = kind
        self.pool = pool
        self.masks = masks
        self.sizes = [c.size for c in pool]
        self.theta_idx = [i for i, ok in enumerate(in_theta) if ok]
        self.chi_idx = [i for i, ok in enumerate(in_chi) if ok]
        self.tp_idx = [i for i, ok in enumerate(in_tp) if ok]
        self.bot_theta = bot_theta
        self.bot_chi = bot_chi
        self.bot_tp = bot_tp
        self.cover1 = cover1
        self.cover2 = cover2
        self.full = full
        self.m_s = m_s
        self.t1m = t1m
        self.t2m = t2m
        self.terms = terms
        self.deadline = deadline
        self._mc_cache: tuple[dict[int, int], dict[int, int]] = ({0: 0}, {0: 0})
        self._killers: tuple[dict[int, list[int]], dict[int, list[int]]] = ({}, {})
        self.collected: list[Triple] = []
        self._k = 0
        self._c = 0

    # -- exact min-cover lower bound --

    def _killer_list(self, role: int, row: int) -> list[int]:
        table = self._killers[role - 1]
        cached = table.get(row)
        if cached is None:
            idx = self.theta_idx if role == 1 else self.tp_idx
            bit = 1 << row
            cached = sorted(
                (i for i in idx if not (self.masks[i] & bit)),
                key=lambda i: (self.sizes[i], i),
            )
            table[row] = cached
        return cached

    def min_cover(self, target: int, role: int) -> int:
        """Exact minimal literal cost of excluding every target row; memoized.

        Recursion strictly shrinks the target (the branched row is gone), so
        no cycle guard is needed; killer lists are size-sorted, letting the
        loop break as soon as no cheaper cover is possible.
        """
        if target == 0:
            return 0
        if (self.bot_theta if role == 1 else self.bot_tp):
            return 0
        cache = self._mc_cache[role - 1]
        cached = cache.get(target)
        if cached is not None:
            return cached
        masks = self.masks
        sizes = self.sizes
        cache_get = cache.get

        def compute(tgt: int) -> int:
            row = (tgt & -tgt).bit_length() - 1
            best = _INF
            for i in self._killer_list(role, row):
                cost = sizes[i]
                if cost >= best:
                    break
                sub_t = tgt & masks[i]
                sub = cache_get(sub_t)
                if sub is None:
                    sub = compute(sub_t)
                total = cost + sub
                if total < best:
                    best = total
            cache[tgt] = best
            return best

        return compute(target)

    # -- level driver --

    def mass(self, idx: list[int]) -> int:
        return sum(self.sizes[i] for i in idx)

    def run_level(self, k: int) -> tuple[int, list[Triple]] | None:
        max_c = min(k, self.mass(self.chi_idx))
        for c in range(max_c, -1, -1):
            self.collected = []
            self._k, self._c = k, c
            if self.bot_chi and c == 0:
                self._theta_phase(chi_chosen=None, alive_chi=0)
            self._chi_rec(0, c, [], self.full)
            if self.collected:
                return c, self.collected
        return None

    # -- chi phase: all subsets of the chi pool with exact size c --

    def _chi_rec(self, pos: int, remaining: int, chosen: list[int], alive: int) -> None:
        self.deadline.check()
        if remaining == 0:
            self._theta_phase(chi_chosen=list(chosen), alive_chi=alive)
            return
        mc1 = self.min_cover(self.cover1 & alive, 1)
        mc2 = self.min_cover(self.cover2 & alive, 2)
        need = max(0, mc1 - remaining) + max(0, mc2 - remaining)
        if self._c + need > self._k:
            return
        for j in range(pos, len(self.chi_idx)):
            i = self.chi_idx[j]
            if self.sizes[i] <= remaining:
                chosen.append(i)
                self._chi_rec(j + 1, remaining - self.sizes[i], chosen, alive & self.masks[i])
                chosen.pop()

    # -- theta phase: irredundant covers of cover1 within the side budget --

    def _theta_phase(self, chi_chosen: list[int] | None, alive_chi: int) -> None:
        chi_set = set(chi_chosen) if chi_chosen else set()
        uncovered2 = self.cover2 & alive_chi
        mc2 = self.min_cover(uncovered2, 2)
        side_budget = self._k - self._c
        if self.bot_theta:
            self._tp_phase(chi_chosen, alive_chi, None, 0, side_budget, chi_set)
        self._theta_rec(0, 0, alive_chi, [], chi_chosen, alive_chi, mc2, side_budget, chi_set)

    def _theta_rec(
        self,
        pos: int,
        used: int,
        alive: int,
        chosen: list[int],
        chi_chosen: list[int] | None,
        alive_chi: int,
        mc2: int,
        side_budget: int,
        chi_set: set[int],
    ) -> None:
        self.deadline.check()
        uncovered1 = self.cover1 & alive
        if uncovered1 == 0:
            b = side_budget - used
            if b >= 0 and mc2 <= b:
                self._tp_phase(chi_chosen, alive_chi, list(chosen), used, b, chi_set)
            return
        if used + self.min_cover(uncovered1, 1) + mc2 > side_budget:
            return
        for j in range(pos, len(self.theta_idx)):
            i = self.theta_idx[j]
            if i in chi_set or self.sizes[i] > side_budget - used:
                continue
            if (uncovered1 & self.masks[i]) == uncovered1:
                continue  # no progress on the side-1 cover
            chosen.append(i)
            self._theta_rec(
                j + 1, used + self.sizes[i], alive & self.masks[i], chosen,
                chi_chosen, alive_chi, mc2, side_budget, chi_set,
            )
            chosen.pop()

    # -- theta' phase: irredundant covers of cover2 with the exact leftover budget --

    def _tp_phase(
        self,
        chi_chosen: list[int] | None,
        alive_chi: int,
        theta_chosen: list[int] | None,
        theta_used: int,
        b: int,
        chi_set: set[int],
    ) -> None:
        if self.bot_tp and b == 0:
            self._emit(chi_chosen, theta_chosen, None, alive_chi)
        theta_set = set(theta_chosen) if theta_chosen else set()
        self._tp_rec(0, 0, alive_chi, [], chi_chosen, theta_chosen, b, chi_set | theta_set, alive_chi)

    def _tp_rec(
        self,
        pos: int,
        used: int,
        alive: int,
        chosen: list[int],
        chi_chosen: list[int] | None,
        theta_chosen: list[int] | None,
        b: int,
        taken: set[int],
        alive_chi: int,
    ) -> None:
        self.deadline.check()
        uncovered2 = self.cover2 & alive
        if uncovered2 == 0:
            if used == b:
                self._emit(chi_chosen, theta_chosen, list(chosen), alive_chi)
            return
        if used + self.min_cover(uncovered2, 2) > b:
            return
        for j in range(pos, len(self.tp_idx)):
            i = self.tp_idx[j]
            if i in taken or self.sizes[i] > b - used:
                continue
            if (uncovered2 & self.masks[i]) == uncovered2:
                continue
            chosen.append(i)
            self._tp_rec(j + 1, used + self.sizes[i], alive & self.masks[i], chosen,
                         chi_chosen, theta_chosen, b, taken, alive_chi)
            chosen.pop()

    # -- candidate assembly and the raw condition check --

    def _build(self, indices: list[int] | None) -> tuple[CnfFormula, int]:
        if indices is None:
            return CNF_BOTTOM, 0
        mask = self.full
        for i in indices:
            mask &= self.masks[i]
        return CnfFormula.of(self.pool[i] for i in indices), mask

    @staticmethod
    def _is_term(cnf: CnfFormula) -> bool:
        seen: set[int] = set()
        for cl in cnf.clauses:
            if cl.size != 1:
                return False
            sid = cl.literals[0].symbol.id
            if sid in seen:
                return False
            seen.add(sid)
        return True

    def _emit(
        self,
        chi_chosen: list[int] | None,
        theta_chosen: list[int] | None,
        tp_chosen: list[int] | None,
        alive_chi: int,
    ) -> None:
        theta, theta_mask = self._build(theta_chosen)
        chi, chi_mask = self._build(chi_chosen)
        theta_prime, tp_mask = self._build(tp_chosen)
        alive1 = theta_mask & chi_mask
        alive2 = tp_mask & chi_mask
        if self.terms and not (self._is_term(theta) and self._is_term(theta_prime) and self._is_term(chi)):
            return
        kind = self.kind
        if kind in ("ce", "cce"):
            ok = (self.m_s & ~alive1) == 0 and (alive1 & ~self.t1m) == 0
        elif kind == "gce":
            ok = alive1 == self.t1m
        else:  # cd
            ok = alive1 == self.m_s
        if not ok:
            return
        if kind == "ce":
            sp = self._m_sp
            ok = (sp & ~alive2) == 0 and (alive2 & ~self.t2m) == 0
        elif kind == "gce":
            ok = alive2 == self.t2m
        else:  # cce, cd: entailment plus the satisfiability coupling
            ok = (alive2 & ~self.t2m) == 0 and (alive2 != 0) == (self.m_s != 0)
        if not ok:
            return
        self.collected.append((theta, theta_prime, chi))

    _m_sp = 0  # set by oracle_solve for CE


def _occurring_masks(inst: ProblemInstance, symbols: Sequence[Symbol]) -> dict[str, int]:
    cols, full = _column_masks(len(symbols))
    pos_by_id = {sym.id: j for j, sym in enumerate(symbols)}

    def fm(f: Formula) -> int:
        return _formula_mask(f, pos_by_id, cols, full)

    out = {"full": full}
    out["phi"] = fm(inst.phi)
    out["psi"] = fm(inst.psi)
    out["t1"] = out["phi"] & (full ^ out["psi"])
    out["t2"] = (full ^ out["phi"]) & out["psi"]
    if inst.s is not None:
        m = full
        for f in inst.s:
            m &= fm(f)
        out["s"] = m
    if inst.s_prime is not None:
        m = full
        for f in inst.s_prime:
            m &= fm(f)
        out["sp"] = m
    return out


def _sep_solve(
    inst: ProblemInstance,
    symbols: Sequence[Symbol],
    masks: dict[str, int],
    pool: list[Clause],
    pool_masks: list[int],
    budget: EnumerationBudget,
    terms: bool,
    deadline: _Deadline,
) -> OracleResult:
    m_phi, m_psi = masks["phi"], masks["psi"]
    if m_phi & m_psi:
        return OracleResult("error", None, None, ())
    allowed = [i for i, m in enumerate(pool_masks) if (m_phi & ~m) == 0]
    if terms:
        allowed = [i for i in allowed if pool[i].size == 1]
    bot = m_phi == 0 and not terms  # the bare empty clause is not a partial assignment
    sizes = [pool[i].size for i in allowed]
    target = m_psi

    search = _TripleSearch(
        "sep", pool, pool_masks,
        [False] * len(pool), [False] * len(pool), [False] * len(pool),
        False, False, False, 0, 0, masks["full"], None, 0, 0, terms, deadline,
    )
    search.theta_idx = allowed  # reuse its min-cover machinery for role 1
    search.bot_theta = bot

    structural_cap = sum(sizes)
    cap = structural_cap if budget.max_total_size is None else min(budget.max_total_size, structural_cap)
    for k in range(0, cap + 1):
        found: list[CnfFormula] = []

        def rec(pos: int, used: int, alive: int, chosen: list[int]) -> None:
            deadline.check()
            uncovered = target & alive
            if uncovered == 0:
                if used == k:
                    cnf = CnfFormula.of(pool[i] for i in chosen)
                    if not terms or _TripleSearch._is_term(cnf):
                        found.append(cnf)
                return
            if used + search.min_cover(uncovered, 1) > k:
                return
            for j in range(pos, len(allowed)):
                i = allowed[j]
                if pool[i].size > k - used:
                    continue
                if (uncovered & pool_masks[i]) == uncovered:
                    continue
                chosen.append(i)
                rec(j + 1, used + pool[i].size, alive & pool_masks[i], chosen)
                chosen.pop()

        if bot and k == 0:
            found.append(CNF_BOTTOM)
        rec(0, 0, masks["full"], [])
        if found:
            optima = tuple(sorted(((th, CNF_TOP, CNF_TOP) for th in found),
                                  key=lambda t: tuple(str(f) for f in t)))
            return OracleResult("ok", k, 0, optima)
    if budget.max_total_size is not None and cap == budget.max_total_size and cap < structural_cap:
        raise OracleBudgetError("size budget exhausted before an optimum was proven")
    return OracleResult("error", None, None, ())


def oracle_solve(
    inst: ProblemInstance,
    budget: EnumerationBudget | None = None,
    shape: str = "cnf",
) -> OracleResult:
    """All optimal triples for the instance, or the problem's error output.

    Raises OracleBudgetError when a vocabulary/size/deadline budget runs out
    before the answer is settled, which is distinct from the semantic "error".
    """
    if shape not in ("cnf", "terms"):
        raise ValueError(f"unknown shape {shape!r}")
    budget = budget or EnumerationBudget()
    symbols = inst.symbols()
    n = len(symbols)
    if n > min(budget.max_vocab, HARD_VOCAB_CAP):
        raise OracleBudgetError(f"vocabulary of {n} exceeds the budget")
    deadline = _Deadline(budget.deadline)
    masks = _occurring_masks(inst, symbols)
    full = masks["full"]
    terms = shape == "terms"

    max_width = None
    if n > 8 and budget.max_total_size is not None:
        max_width = budget.max_total_size
    pool = canonical_clauses(symbols, max_width=1 if terms else max_width)
    pos_by_id = {sym.id: j for j, sym in enumerate(symbols)}
    cols, _ = _column_masks(n)
    pool_masks = [_clause_mask(c, pos_by_id, cols, full) for c in pool]

    if inst.kind == "sep":
        return _sep_solve(inst, symbols, masks, pool, pool_masks, budget, terms, deadline)

    t1m, t2m = masks["t1"], masks["t2"]
    if inst.kind == "gce":
        base1, base2 = t1m, t2m
        m_s = None
        feasible = True
    elif inst.kind == "ce":
        base1, base2 = masks["s"], masks["sp"]
        m_s = masks["s"]
        feasible = (masks["s"] & ~t1m) == 0 and (masks["sp"] & ~t2m) == 0
    else:  # cce, cd
        base1 = masks["s"]
        base2 = None
        m_s = masks["s"]
        feasible = True if m_s == 0 else ((m_s & ~t1m) == 0 and t2m != 0)
    if not feasible:
        return OracleResult("error", None, None, ())

    in_theta = [(base1 & ~m) == 0 for m in pool_masks]
    if inst.kind in ("ce", "gce"):
        in_chi = [ok and (base2 & ~m) == 0 for ok, m in zip(in_theta, pool_masks)]
        in_tp = [(base2 & ~m) == 0 for m in pool_masks]
        bot_tp = base2 == 0 and not terms
        bot_chi = base1 == 0 and base2 == 0 and not terms
    else:
        in_chi = list(in_theta)
        in_tp = [True] * len(pool)
        bot_tp = not terms
        bot_chi = base1 == 0 and not terms
    bot_theta = base1 == 0 and not terms

    cover1 = (full ^ m_s) if inst.kind == "cd" else (full ^ t1m)
    if inst.kind in ("cce", "cd") and m_s == 0:
        cover2 = full
    else:
        cover2 = full ^ t2m

    search = _TripleSearch(
        inst.kind, pool, pool_masks, in_theta, in_chi, in_tp,
        bot_theta, bot_chi, bot_tp, cover1, cover2, full, m_s, t1m, t2m, terms, deadline,
    )
    if inst.kind == "ce":
        search._m_sp = masks["sp"]

    structural_cap = search.mass(search.theta_idx) + search.mass(search.chi_idx) + search.mass(search.tp_idx)
    if terms:
        structural_cap = min(structural_cap, 3 * n)
    cap = structural_cap if budget.max_total_size is None else min(budget.max_total_size, structural_cap)
    for k in range(0, cap + 1):
        hit = search.run_level(k)
        if hit is not None:
            c, triples = hit
            optima = tuple(sorted(triples, key=lambda t: tuple(str(f) for f in t)))
            return OracleResult("ok", k, c, optima)
    if budget.max_total_size is not None and cap == budget.max_total_size and cap < structural_cap:
        raise OracleBudgetError("size budget exhausted before an optimum was proven")
    return OracleResult("error", None, None, ())


def oracle_min_flip(s: PartialAssignment, target: Formula | CnfFormula) -> FlipSet | None:
    """A minimum-cardinality flip set lambda with s (triangle) lambda |= target.

    ``s`` must be total over the symbols of ``target``; returns None when the
    target is unsatisfiable over that vocabulary.
    """
    vocab = list(s.symbols())
    vocab_ids = {sym.id for sym in vocab}
    extra = atoms(target) if isinstance(target, Formula) else target.symbols()
    missing = [sym for sym in extra if sym.id not in vocab_ids]
    if missing:
        raise ValueError(f"assignment is not total over {sorted(sym.name for sym in missing)}")
    vocab.sort(key=lambda sym: sym.id)
    mask = truth_mask(target, vocab)
    if mask == 0:
        return None
    s_row = 0
    values = s.as_dict()
    for j, sym in enumerate(vocab):
        if values[sym]:
            s_row |= 1 << j
    best: tuple[int, int] | None = None
    rows = 1 << len(vocab)
    for r in range(rows):
        if (mask >> r) & 1:
            diff = r ^ s_row
            key = (diff.bit_count(), diff)
            if best is None or key < best:
                best = key
    _, diff = best  # mask != 0 guarantees a row
    s_literals = {lit.symbol.id: lit for lit in s.literals()}
    flipped = tuple(s_literals[vocab[j].id] for j in range(len(vocab)) if (diff >> j) & 1)
    return FlipSet(flipped)
