"""Production solvers for the five contrastive-explanation problems.

Search is iterative deepening on total output size k.  For each k the chi
budget c is scanned from k down to 0 (chi size is the secondary, maximized
objective); candidate triples are drawn from clause pools pre-filtered by the
per-clause entailment conditions the problems force, and every candidate
is verified with SAT calls.  Two candidate generators share the machinery:

* exhaustive - stream every in-budget triple in canonical order and verify;
* cegar      - the same traversal, but counterexample assignments learned
  from failed verifications prune whole subtrees, and candidates must kill
  every stored counterexample before they are even verified.

Both collect every verified triple at the winning (k, c) level and reduce
with an order-independent key, so they return byte-identical solutions.
"""

from __future__ import annotations

import random
import time
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import sat
from .cnf import CNF_BOTTOM, Clause, CnfFormula, canonical_clauses
from .contrast import classify_clause, is_strong_contrast
from .formula import And, Formula, Not, conjoin
from .problem import ProblemInstance, Solution, SolveOptions, VerificationReport

__all__ = [
    "solve",
    "solve_ce",
    "solve_gce",
    "solve_sep",
    "solve_cce",
    "solve_cd",
    "search_iterative",
    "repair_inputs",
    "verify_solution",
]

_BOT = None  # marker for a slot holding the bare empty clause (falsum)


class _DeadlineReached(Exception):
    pass


def repair_inputs(phi: Formula, psi: Formula) -> tuple[Formula, Formula]:
    """Separate overlapping inputs by replacing phi with phi & !psi."""
    return And(phi, Not(psi)), psi


def _entailed_flags(premises: tuple[Formula, ...], clause_formulas: Sequence[Formula]) -> list[bool]:
    return [sat.entails(premises, f) for f in clause_formulas]


def _filter_pool(
    premises: tuple[Formula, ...],
    clauses: Sequence[Clause],
    jobs: int,
) -> list[bool]:
    formulas = [c.to_formula() for c in clauses]
    if jobs <= 1 or len(clauses) < 64:
        return _entailed_flags(premises, formulas)
    chunk = (len(formulas) + jobs - 1) // jobs
    chunks = [formulas[i : i + chunk] for i in range(0, len(formulas), chunk)]
    flags: list[bool] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_entailed_flags, [premises] * len(chunks), chunks):
            flags.extend(part)
    return flags


@dataclass
class _Candidate:
    theta: tuple[int, ...] | None  # pool indices, or None for the bare empty clause
    theta_prime: tuple[int, ...] | None
    chi: tuple[int, ...] | None


class _Engine:
    """Search state for one instance + options pair."""

    def __init__(self, inst: ProblemInstance, opts: SolveOptions) -> None:
        self.inst = inst
        self.opts = opts
        self.terms = opts.shape == "terms"
        symbols = opts.output_vocab if opts.output_vocab is not None else inst.symbols()
        self.symbols = tuple(sorted(symbols, key=lambda s: s.id))
        self.pos_by_id = {sym.id: j for j, sym in enumerate(self.symbols)}
        self.vocab_bits = (1 << len(self.symbols)) - 1
        self.deadline_at = None if opts.deadline is None else time.monotonic() + opts.deadline
        self._ticks = 0

        self.s_set: tuple[Formula, ...] = inst.s or ()
        self.sp_set: tuple[Formula, ...] = inst.s_prime or ()
        self.target1 = inst.left_target
        self.target2 = inst.right_target
        self.s_formula = inst.s_formula()
        self.s_sat = sat.is_satisfiable(*self.s_set) if inst.s is not None else None

        self.pool = canonical_clauses(self.symbols, max_width=1 if self.terms else None)
        self.sizes = [c.size for c in self.pool]
        self.reps = [self._clause_rep(c) for c in self.pool]
        self._build_roles()

        # counterexample stores: assignments encoded as bit vectors over vocab positions
        self.kill1: list[int] = []
        self.kill2: list[int] = []
        self._killer_pos1: list[list[int]] = []  # per kill1 cex: killing positions in theta order
        self._killer_pos2: list[list[int]] = []
        self._mk_cache: dict[tuple[int, tuple[int, ...]], int] = {}
        self.blocked_pairs: set[tuple] = set()
        self.blocked_triples: set[tuple] = set()
        self.collected: list[tuple[CnfFormula, CnfFormula, CnfFormula]] = []

    # -- setup -------------------------------------------------------------

    def _clause_rep(self, clause: Clause) -> tuple[int, int]:
        pos = neg = 0
        for lit in clause.literals:
            bit = 1 << self.pos_by_id[lit.symbol.id]
            if lit.negated:
                neg |= bit
            else:
                pos |= bit
        return pos, neg

    def _build_roles(self) -> None:
        inst, jobs = self.inst, self.opts.jobs
        kind = inst.kind
        n = len(self.pool)
        if kind in ("ce", "cce", "cd"):
            ent_s = _filter_pool(self.s_set, self.pool, jobs)
        if kind == "ce":
            ent_sp = _filter_pool(self.sp_set, self.pool, jobs)
            in1 = ent_s
            in2 = ent_sp
            inx = [a and b for a, b in zip(ent_s, ent_sp)]
            sp_sat = sat.is_satisfiable(*self.sp_set)
            self.bot1 = not self.s_sat
            self.bot2 = not sp_sat
            self.botx = not self.s_sat and not sp_sat
        elif kind == "gce":
            ent_t1 = _filter_pool((self.target1,), self.pool, jobs)
            ent_t2 = _filter_pool((self.target2,), self.pool, jobs)
            in1 = ent_t1
            in2 = ent_t2
            inx = [a and b for a, b in zip(ent_t1, ent_t2)]
            self.bot1 = not sat.is_satisfiable(self.target1)
            self.bot2 = not sat.is_satisfiable(self.target2)
            self.botx = self.bot1 and self.bot2
        elif kind == "sep":
            ent_phi = _filter_pool((inst.phi,), self.pool, jobs)
            in1 = ent_phi
            in2 = [False] * n
            inx = [False] * n
            self.bot1 = not sat.is_satisfiable(inst.phi)
            self.bot2 = False
            self.botx = False
        else:  # cce, cd
            in1 = ent_s
            in2 = [True] * n
            inx = list(ent_s)
            self.bot1 = not self.s_sat
            self.bot2 = True
            self.botx = not self.s_sat
        if self.terms:
            self.bot1 = self.bot2 = self.botx = False

        rng = random.Random(self.opts.seed) if self.opts.seed else None
        order = list(range(n))
        if rng is not None:
            rng.shuffle(order)
        self.theta_idx = [i for i in order if in1[i]]
        self.chi_idx = [i for i in order if inx[i]]
        self.tp_idx = [i for i in order if in2[i]]
        self.mass_theta = sum(self.sizes[i] for i in self.theta_idx)
        self.mass_chi = sum(self.sizes[i] for i in self.chi_idx)
        self.mass_tp = sum(self.sizes[i] for i in self.tp_idx)

    # -- bookkeeping ---------------------------------------------------------

    def _tick(self) -> None:
        if self.deadline_at is None:
            return
        self._ticks += 1
        if self._ticks & 0xFF == 0 and time.monotonic() > self.deadline_at:
            raise _DeadlineReached

    def _clause_satisfied(self, rep: tuple[int, int], bits: int) -> bool:
        pos, neg = rep
        return bool((pos & bits) | (neg & ~bits & self.vocab_bits))

    def _survives(self, indices: tuple[int, ...] | None, extra: tuple[int, ...] | None, bits: int) -> bool:
        """True when the assignment satisfies every clause of the joined formulas."""
        if indices is None or extra is None:
            return False  # a bare empty clause kills every assignment
        for i in indices:
            if not self._clause_satisfied(self.reps[i], bits):
                return False
        for i in extra:
            if not self._clause_satisfied(self.reps[i], bits):
                return False
        return True

    def _add_kill1(self, bits: int) -> None:
        self.kill1.append(bits)
        self._killer_pos1.append(
            [j for j, i in enumerate(self.theta_idx) if not self._clause_satisfied(self.reps[i], bits)]
        )

    def _add_kill2(self, bits: int) -> None:
        self.kill2.append(bits)
        self._killer_pos2.append(
            [j for j, i in enumerate(self.tp_idx) if not self._clause_satisfied(self.reps[i], bits)]
        )

    def _min_kill_cost(self, pending: tuple[int, ...], side: int) -> int:
        """Exact minimal literal cost of killing every pending counterexample.

        Computed over the side's whole pool, ignoring position cursors, so it
        is an admissible lower bound anywhere in the traversal.
        """
        if not pending:
            return 0
        if (self.bot1 if side == 1 else self.bot2):
            return 0  # a bare empty clause kills everything for free
        key = (side, pending)
        cached = self._mk_cache.get(key)
        if cached is not None:
            return cached
        killer_lists = self._killer_pos1 if side == 1 else self._killer_pos2
        idx = self.theta_idx if side == 1 else self.tp_idx
        kills = self.kill1 if side == 1 else self.kill2
        self._mk_cache[key] = 10**9  # cycle guard; overwritten below
        best = 10**9
        first = pending[0]
        for j in killer_lists[first]:
            i = idx[j]
            cost = self.sizes[i]
            if cost >= best:
                continue
            rep = self.reps[i]
            rest = tuple(ci for ci in pending[1:] if self._clause_satisfied(rep, kills[ci]))
            sub = self._min_kill_cost(rest, side)
            if cost + sub < best:
                best = cost + sub
        self._mk_cache[key] = best
        return best

    def _model_bits(self, model: dict[int, bool]) -> int:
        bits = 0
        for sym in self.symbols:
            if model.get(sym.id, False):
                bits |= 1 << self.pos_by_id[sym.id]
        return bits

    # -- candidate materialization & verification -----------------------------

    def _build_cnf(self, indices: tuple[int, ...] | None) -> CnfFormula:
        if indices is None:
            return CNF_BOTTOM
        return CnfFormula.of(self.pool[i] for i in indices)

    def _key(self, cand: _Candidate) -> tuple:
        return (
            _BOT if cand.theta is None else tuple(sorted(cand.theta)),
            _BOT if cand.theta_prime is None else tuple(sorted(cand.theta_prime)),
            _BOT if cand.chi is None else tuple(sorted(cand.chi)),
        )

    def _fast_reject(self, cand: _Candidate) -> bool:
        key = self._key(cand)
        if key in self.blocked_triples:
            return True
        if (key[1], key[2]) in self.blocked_pairs:
            return True
        for bits in self.kill1:
            if self._survives(cand.theta, cand.chi, bits):
                return True
        for bits in self.kill2:
            if self._survives(cand.theta_prime, cand.chi, bits):
                return True
        return False

    def _verify(self, cand: _Candidate) -> bool:
        kind = self.inst.kind
        theta = self._build_cnf(cand.theta)
        theta_prime = self._build_cnf(cand.theta_prime)
        chi = self._build_cnf(cand.chi)
        side1 = (theta, chi)
        side2 = (theta_prime, chi)

        if kind == "sep":
            model = sat.find_model(theta, self.inst.psi, complete_over=self.symbols)
            if model is not None:
                self._add_kill1(self._model_bits(model))
                return False
            self.blocked_triples.add(self._key(cand))
            return True

        model = sat.find_model(*side1, Not(self.target1), complete_over=self.symbols)
        if model is not None:
            self._add_kill1(self._model_bits(model))
            return False
        if kind == "cd":
            model = sat.find_model(*side1, Not(self.s_formula), complete_over=self.symbols)
            if model is not None:
                self._add_kill1(self._model_bits(model))
                return False
        model = sat.find_model(*side2, Not(self.target2), complete_over=self.symbols)
        if model is not None:
            self._add_kill2(self._model_bits(model))
            return False
        if kind in ("cce", "cd"):
            side2_model = sat.find_model(*side2, complete_over=self.symbols)
            if self.s_sat and side2_model is None:
                key = self._key(cand)
                self.blocked_pairs.add((key[1], key[2]))
                return False
            if not self.s_sat and side2_model is not None:
                self._add_kill2(self._model_bits(side2_model))
                return False
        key = self._key(cand)
        self.blocked_triples.add(key)
        return True

    # -- candidate generation ---------------------------------------------------

    def _pending_filter(self, pending: tuple[int, ...], clause_index: int, side: int) -> tuple[int, ...]:
        rep = self.reps[clause_index]
        kills = self.kill1 if side == 1 else self.kill2
        return tuple(ci for ci in pending if self._clause_satisfied(rep, kills[ci]))

    def _suffix_killable(self, pending: tuple[int, ...], pos: int, budget: int, side: int) -> bool:
        """Every pending counterexample must still have an affordable killer at >= pos."""
        killer_lists = self._killer_pos1 if side == 1 else self._killer_pos2
        idx = self.theta_idx if side == 1 else self.tp_idx
        for ci in pending:
            positions = killer_lists[ci]
            at = bisect_left(positions, pos)
            if at == len(positions):
                return False
            if min(self.sizes[idx[j]] for j in positions[at:]) > budget:
                return False
        return True

    def _candidates(self, k: int, c: int, prune: bool) -> Iterator[_Candidate]:
        if self.botx and c == 0:
            yield from self._theta_level(k, c, None, (), prune)
        if prune:
            pending1 = tuple(range(len(self.kill1)))
            pending2 = tuple(range(len(self.kill2)))
        else:
            pending1 = pending2 = ()
        yield from self._chi_rec(k, c, 0, c, [], pending1, pending2, prune)

    def _chi_rec(
        self,
        k: int,
        c: int,
        pos: int,
        remaining: int,
        chosen: list[int],
        pending1: tuple[int, ...],
        pending2: tuple[int, ...],
        prune: bool,
    ) -> Iterator[_Candidate]:
        self._tick()
        if remaining == 0:
            yield from self._theta_level(k, c, tuple(chosen), pending1, prune, pending2)
            return
        if prune:
            mk1 = self._min_kill_cost(pending1, 1)
            mk2 = self._min_kill_cost(pending2, 2)
            if c + max(0, mk1 - remaining) + max(0, mk2 - remaining) > k:
                return
        for j in range(pos, len(self.chi_idx)):
            i = self.chi_idx[j]
            if self.sizes[i] > remaining:
                continue
            if self.terms and self._dup_symbol(chosen, i):
                continue
            if prune:
                next1 = self._pending_filter(pending1, i, 1)
                next2 = self._pending_filter(pending2, i, 2)
            else:
                next1, next2 = pending1, pending2
            chosen.append(i)
            yield from self._chi_rec(k, c, j + 1, remaining - self.sizes[i], chosen, next1, next2, prune)
            chosen.pop()

    def _dup_symbol(self, chosen: list[int], candidate: int) -> bool:
        sym = self.pool[candidate].literals[0].symbol.id
        return any(self.pool[i].literals[0].symbol.id == sym for i in chosen)

    def _theta_level(
        self,
        k: int,
        c: int,
        chi: tuple[int, ...] | None,
        pending1: tuple[int, ...],
        prune: bool,
        pending2: tuple[int, ...] = (),
    ) -> Iterator[_Candidate]:
        chi_set = frozenset(chi) if chi is not None else frozenset()
        budget = k - c
        if chi is None:
            pending2 = ()  # a bare empty clause in chi kills everything
        mk2 = self._min_kill_cost(pending2, 2) if prune else 0
        if self.bot1:
            yield from self._tp_level(k, chi, None, budget, chi_set, prune, pending2)
        yield from self._theta_rec(k, chi, chi_set, 0, 0, [], pending1, budget, prune, pending2, mk2)

    def _theta_rec(
        self,
        k: int,
        chi: tuple[int, ...] | None,
        chi_set: frozenset[int],
        pos: int,
        used: int,
        chosen: list[int],
        pending1: tuple[int, ...],
        budget: int,
        prune: bool,
        pending2: tuple[int, ...],
        mk2: int,
    ) -> Iterator[_Candidate]:
        self._tick()
        if not prune or not pending1:
            yield from self._tp_level(k, chi, tuple(chosen), budget - used, chi_set | set(chosen), prune, pending2)
        if prune:
            if used + self._min_kill_cost(pending1, 1) + mk2 > budget:
                return
            if pending1 and not self._suffix_killable(pending1, pos, budget - used - mk2, 1):
                return
        for j in range(pos, len(self.theta_idx)):
            i = self.theta_idx[j]
            if i in chi_set or self.sizes[i] > budget - used:
                continue
            if self.terms and self._dup_symbol(chosen, i):
                continue
            next_pending = self._pending_filter(pending1, i, 1) if prune else pending1
            chosen.append(i)
            yield from self._theta_rec(
                k, chi, chi_set, j + 1, used + self.sizes[i], chosen, next_pending, budget, prune, pending2, mk2
            )
            chosen.pop()

    def _tp_level(
        self,
        k: int,
        chi: tuple[int, ...] | None,
        theta: tuple[int, ...] | None,
        b: int,
        taken: frozenset[int],
        prune: bool,
        pending2: tuple[int, ...],
    ) -> Iterator[_Candidate]:
        if self.inst.kind == "sep":
            if b == 0:
                yield _Candidate(theta, (), ())
            return
        if self.bot2 and b == 0:
            yield _Candidate(theta, None, chi)
        yield from self._tp_rec(k, chi, theta, 0, 0, [], pending2, b, taken, prune)

    def _tp_rec(
        self,
        k: int,
        chi: tuple[int, ...] | None,
        theta: tuple[int, ...] | None,
        pos: int,
        used: int,
        chosen: list[int],
        pending2: tuple[int, ...],
        b: int,
        taken: frozenset[int],
        prune: bool,
    ) -> Iterator[_Candidate]:
        self._tick()
        if used == b:
            if not prune or not pending2:
                yield _Candidate(theta, tuple(chosen), chi)
            return
        if prune:
            if used + self._min_kill_cost(pending2, 2) > b:
                return
            if pending2 and not self._suffix_killable(pending2, pos, b - used, 2):
                return
        for j in range(pos, len(self.tp_idx)):
            i = self.tp_idx[j]
            if i in taken or self.sizes[i] > b - used:
                continue
            if self.terms and self._dup_symbol(chosen, i):
                continue
            next_pending = self._pending_filter(pending2, i, 2) if prune else pending2
            chosen.append(i)
            yield from self._tp_rec(k, chi, theta, j + 1, used + self.sizes[i], chosen, next_pending, b, taken, prune)
            chosen.pop()

    # -- level driver -------------------------------------------------------------

    def structural_cap(self) -> int:
        if self.terms:
            return 3 * len(self.symbols)
        return self.mass_theta + self.mass_chi + self.mass_tp

    def collect_level(self, k: int, c: int, prune: bool) -> list[tuple[CnfFormula, CnfFormula, CnfFormula]]:
        self.collected = []
        for cand in self._candidates(k, c, prune):
            if self._fast_reject(cand):
                continue
            if self._verify(cand):
                self.collected.append(
                    (self._build_cnf(cand.theta), self._build_cnf(cand.theta_prime), self._build_cnf(cand.chi))
                )
        return self.collected

    def run(self, cap: int, prune: bool) -> tuple[int, int, list] | None:
        for k in range(0, cap + 1):
            max_c = min(k, self.mass_chi)
            for c in range(max_c, -1, -1):
                found = self.collect_level(k, c, prune)
                if found:
                    return k, c, found
        return None


def _cnf_key(cnf: CnfFormula) -> tuple:
    return tuple(c.key for c in cnf.clauses)


def _triple_sort_key(triple: tuple[CnfFormula, CnfFormula, CnfFormula]) -> tuple:
    """Canonical-form order: clause keys by (symbol id, polarity), positive first."""
    return (_cnf_key(triple[0]), _cnf_key(triple[1]), _cnf_key(triple[2]))


def _precheck(inst: ProblemInstance) -> str | None:
    """Semantic feasibility of the CNF-shaped problem; returns an error reason or None."""
    kind = inst.kind
    if kind == "ce":
        if not sat.entails(inst.s, inst.left_target):
            return "S does not entail phi & !psi"
        if not sat.entails(inst.s_prime, inst.right_target):
            return "S' does not entail !phi & psi"
        return None
    if kind == "gce":
        return None
    if kind == "sep":
        if sat.is_satisfiable(And(inst.phi, inst.psi)):
            return "phi and psi are jointly satisfiable; no separator exists"
        return None
    # cce, cd
    if sat.is_satisfiable(*inst.s):
        if not sat.is_satisfiable(inst.right_target):
            if sat.entails([inst.psi], inst.phi):
                return "psi entails phi; !phi & psi is unsatisfiable (see repair)"
            return "!phi & psi is unsatisfiable"
        if not sat.entails(inst.s, inst.left_target):
            return "S does not entail phi & !psi"
    return None


def verify_solution(inst: ProblemInstance, sol: Solution) -> VerificationReport:
    """Recompute every problem condition and tag output clauses."""
    if not sol.has_triple:
        return VerificationReport()
    theta, theta_prime, chi = sol.triple
    kind = inst.kind
    conditions: dict[str, bool] = {}
    if kind == "ce":
        conditions["s_entails_theta_chi"] = sat.entails(inst.s, (theta, chi))
        conditions["theta_chi_entails_target"] = sat.entails((theta, chi), inst.left_target)
        conditions["s_prime_entails_theta_prime_chi"] = sat.entails(inst.s_prime, (theta_prime, chi))
        conditions["theta_prime_chi_entails_countertarget"] = sat.entails((theta_prime, chi), inst.right_target)
    elif kind == "gce":
        conditions["theta_chi_equiv_target"] = sat.equivalent((theta, chi), (inst.left_target,))
        conditions["theta_prime_chi_equiv_countertarget"] = sat.equivalent((theta_prime, chi), (inst.right_target,))
    elif kind == "sep":
        conditions["phi_entails_theta"] = sat.entails((inst.phi,), theta)
        conditions["psi_entails_not_theta"] = sat.entails((inst.psi,), Not(theta.to_formula()))
    else:
        if kind == "cd":
            conditions["theta_chi_equiv_s"] = sat.equivalent((theta, chi), inst.s)
        else:
            conditions["s_entails_theta_chi"] = sat.entails(inst.s, (theta, chi))
        conditions["theta_chi_entails_target"] = sat.entails((theta, chi), inst.left_target)
        conditions["theta_prime_chi_entails_countertarget"] = sat.entails((theta_prime, chi), inst.right_target)
        conditions["coupling"] = sat.is_satisfiable(theta_prime, chi) == sat.is_satisfiable(*inst.s)
    if sol.status == "ok":
        conditions["sizes_consistent"] = (
            sol.total_size == theta.size + theta_prime.size + chi.size and sol.chi_size == chi.size
        )

    if kind == "ce":
        left: Formula = conjoin(inst.s)
        right: Formula = conjoin(inst.s_prime)
    elif kind in ("cce", "cd"):
        left = conjoin(inst.s)
        right = conjoin((theta_prime.to_formula(), chi.to_formula()))
    else:
        left, right = inst.phi, inst.psi

    theta_tags = tuple(classify_clause(cl, left, right) for cl in theta.clauses)
    theta_prime_tags = tuple(classify_clause(cl, right, left) for cl in theta_prime.clauses)
    chi_tags = tuple(classify_clause(cl, left, right) for cl in chi.clauses)
    notes: dict[str, bool] = {}
    if kind in ("ce", "gce"):
        notes["theta_strong_contrast"] = is_strong_contrast(theta, left, right)
        notes["theta_prime_strong_contrast"] = is_strong_contrast(theta_prime, right, left)
    return VerificationReport(conditions, theta_tags, theta_prime_tags, chi_tags, notes)


def search_iterative(inst: ProblemInstance, opts: SolveOptions | None = None) -> Solution:
    """Iterative-deepening driver shared by all five problem kinds."""
    opts = opts or SolveOptions()
    reason = _precheck(inst)
    if reason is not None:
        return Solution(status="error", optimal=True, reason=reason)

    engine = _Engine(inst, opts)
    prune = (opts.strategy in ("auto", "cegar"))
    structural = engine.structural_cap()
    cap = structural if opts.max_total is None else min(opts.max_total, structural)
    try:
        hit = engine.run(cap, prune)
    except _DeadlineReached:
        if engine.collected:
            best = min(engine.collected, key=_triple_sort_key)
            sol = _ok_solution(inst, best, optimal=False, status="timeout")
            sol.reason = "deadline exceeded during chi maximization"
            return sol
        return Solution(status="timeout", optimal=False, reason="deadline exceeded")
    if hit is None:
        if opts.max_total is not None and cap == opts.max_total and cap < structural:
            return Solution(status="timeout", optimal=False, reason=f"no solution within max_total={opts.max_total}")
        return Solution(
            status="error",
            optimal=True,
            reason="no solution exists"
            + (" with partial-assignment shape" if opts.shape == "terms" else ""),
        )
    _, _, found = hit
    best = min(found, key=_triple_sort_key)
    return _ok_solution(inst, best, optimal=True, status="ok")


def _ok_solution(
    inst: ProblemInstance,
    triple: tuple[CnfFormula, CnfFormula, CnfFormula],
    optimal: bool,
    status: str,
) -> Solution:
    theta, theta_prime, chi = triple
    sol = Solution(
        status=status,
        theta=theta,
        theta_prime=theta_prime,
        chi=chi,
        total_size=theta.size + theta_prime.size + chi.size,
        chi_size=chi.size,
        optimal=optimal,
    )
    if status == "ok":  # report present and all-true exactly for ok solutions
        sol.verification = verify_solution(inst, sol)
    return sol


def _prepare(phi: Formula, psi: Formula, opts: SolveOptions | None) -> tuple[Formula, Formula, SolveOptions]:
    opts = opts or SolveOptions()
    if opts.repair and sat.entails([psi], phi):
        phi, psi = repair_inputs(phi, psi)
    return phi, psi, opts


def solve_ce(
    s: Iterable[Formula],
    s_prime: Iterable[Formula],
    phi: Formula,
    psi: Formula,
    opts: SolveOptions | None = None,
) -> Solution:
    phi, psi, opts = _prepare(phi, psi, opts)
    return search_iterative(ProblemInstance.ce(s, s_prime, phi, psi), opts)


def solve_gce(phi: Formula, psi: Formula, opts: SolveOptions | None = None) -> Solution:
    phi, psi, opts = _prepare(phi, psi, opts)
    return search_iterative(ProblemInstance.gce(phi, psi), opts)


def solve_sep(phi: Formula, psi: Formula, opts: SolveOptions | None = None) -> Solution:
    phi, psi, opts = _prepare(phi, psi, opts)
    return search_iterative(ProblemInstance.sep(phi, psi), opts)


def solve_cce(s: Iterable[Formula], phi: Formula, psi: Formula, opts: SolveOptions | None = None) -> Solution:
    phi, psi, opts = _prepare(phi, psi, opts)
    return search_iterative(ProblemInstance.cce(s, phi, psi), opts)


def solve_cd(s: Iterable[Formula], phi: Formula, psi: Formula, opts: SolveOptions | None = None) -> Solution:
    phi, psi, opts = _prepare(phi, psi, opts)
    return search_iterative(ProblemInstance.cd(s, phi, psi), opts)


def solve(inst: ProblemInstance, opts: SolveOptions | None = None) -> Solution:
    """Dispatch on the instance kind, applying repair when requested."""
    opts = opts or SolveOptions()
    phi, psi, opts = _prepare(inst.phi, inst.psi, opts)
    if (phi, psi) != (inst.phi, inst.psi):
        inst = ProblemInstance(inst.kind, phi, psi, inst.s, inst.s_prime)
    return search_iterative(inst, opts)
