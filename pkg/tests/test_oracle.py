import random

import pytest

from contrastix.cnf import CNF_BOTTOM, CNF_TOP, CnfFormula, PartialAssignment, to_cnf
from contrastix.formula import Not, Vocabulary, parse_formula
from contrastix.oracle import (
    EnumerationBudget,
    OracleBudgetError,
    enumerate_cnf,
    oracle_min_flip,
    oracle_solve,
)
from contrastix.problem import ProblemInstance
from contrastix import sat

from helpers import (
    assignments,
    brute_models,
    clause,
    exactly_k,
    holds,
    pqr,
    random_formula,
    unit,
)
from reference import reference_solve


# --- enumerate_cnf -----------------------------------------------------------

def test_enumerate_single_symbol_listing():
    vocab = Vocabulary(["p"])
    p = vocab.get("p")
    got = list(enumerate_cnf((p,), 1))
    assert got == [CNF_TOP, CNF_BOTTOM, CnfFormula.of([unit(p)]), CnfFormula.of([unit(p, True)])]


def test_enumerate_empty_vocabulary():
    assert list(enumerate_cnf((), 0)) == [CNF_TOP, CNF_BOTTOM]


def test_enumerate_two_symbols_count_is_sixteen():
    # hand count for vocab {p, q}, max size 2:
    #   size 0: top, bottom                                -> 2
    #   size 1: four unit-clause formulas                  -> 4
    #   size 2: four binary-clause formulas + C(4,2) = 6
    #           two-unit formulas                          -> 10
    vocab = Vocabulary(["p", "q"])
    got = list(enumerate_cnf(vocab.symbols(), 2))
    assert len(got) == 16


def test_enumerate_no_duplicates_and_size_order():
    vocab = Vocabulary(["p", "q"])
    got = list(enumerate_cnf(vocab.symbols(), 3))
    assert len(set(got)) == len(got)
    sizes = [f.size for f in got]
    assert sizes == sorted(sizes)


def test_enumerate_is_semantically_exhaustive_for_two_symbols():
    # functions over two symbols expressible with cnf size <= 3: everything
    # except xor and xnor, which need two binary clauses (size 4)
    vocab = Vocabulary(["p", "q"])
    syms = vocab.symbols()
    seen = set()
    for f in enumerate_cnf(syms, 3):
        key = tuple(holds(f, a) for a in assignments(syms))
        seen.add(key)
    all_fns = {tuple((i >> r) & 1 == 1 for r in range(4)) for i in range(16)}
    xor = (False, True, True, False)
    xnor = (True, False, False, True)
    assert seen == all_fns - {xor, xnor}


def test_enumerate_rejects_oversized_vocabulary():
    vocab = Vocabulary([f"x{i}" for i in range(13)])
    with pytest.raises(OracleBudgetError):
        list(enumerate_cnf(vocab.symbols(), 1))


# --- oracle_solve on frozen examples ------------------------------------------

def _counting_instance():
    vocab, p, q, r = pqr()
    phi = exactly_k((p, q, r), 2)
    psi = exactly_k((p, q, r), 1)
    return vocab, (p, q, r), phi, psi


def test_oracle_ce_running_example():
    vocab, (p, q, r), phi, psi = _counting_instance()
    s = [parse_formula(t, vocab) for t in ("p", "q", "!r")]
    sp = [parse_formula(t, vocab) for t in ("p", "!q", "!r")]
    res = oracle_solve(ProblemInstance.ce(s, sp, phi, psi))
    assert res.status == "ok"
    assert res.total_size == 4
    assert res.chi_size == 2
    expected = (
        CnfFormula.of([unit(q)]),
        CnfFormula.of([unit(q, True)]),
        CnfFormula.of([unit(p), unit(r, True)]),
    )
    assert expected in res.optima


def test_oracle_gce_bottom_left_side():
    vocab = Vocabulary()
    phi0 = parse_formula("p | q", vocab)
    res = oracle_solve(ProblemInstance.gce(parse_formula("false", vocab), phi0))
    assert res.status == "ok"
    for theta, theta_prime, chi in res.optima:
        assert not sat.is_satisfiable(theta)
        assert sat.equivalent([theta_prime, chi], [phi0])


def test_oracle_gce_complementary_units():
    vocab = Vocabulary()
    phi = parse_formula("p", vocab)
    res = oracle_solve(ProblemInstance.gce(phi, Not(phi)))
    p = vocab.get("p")
    assert (res.total_size, res.chi_size) == (2, 0)
    assert res.optima == ((CnfFormula.of([unit(p)]), CnfFormula.of([unit(p, True)]), CNF_TOP),)


def test_oracle_cce_remark_error():
    vocab = Vocabulary()
    s = [parse_formula("p", vocab)]
    phi = parse_formula("p", vocab)
    psi = parse_formula("p & q", vocab)
    res = oracle_solve(ProblemInstance.cce(s, phi, psi))
    assert res.status == "error"


def test_oracle_cce_single_symbol():
    vocab = Vocabulary()
    s = [parse_formula("p", vocab)]
    phi = parse_formula("p", vocab)
    res = oracle_solve(ProblemInstance.cce(s, phi, Not(phi)))
    p = vocab.get("p")
    assert (res.total_size, res.chi_size) == (2, 0)
    assert res.optima == ((CnfFormula.of([unit(p)]), CnfFormula.of([unit(p, True)]), CNF_TOP),)


def test_oracle_cd_keeps_context_in_chi():
    vocab = Vocabulary()
    s = [parse_formula("p", vocab), parse_formula("q", vocab)]
    phi = parse_formula("p", vocab)
    res = oracle_solve(ProblemInstance.cd(s, phi, Not(phi)))
    p, q = vocab.get("p"), vocab.get("q")
    assert (res.total_size, res.chi_size) == (3, 1)
    assert res.optima == (
        (CnfFormula.of([unit(p)]), CnfFormula.of([unit(p, True)]), CnfFormula.of([unit(q)])),
    )


def test_oracle_sep_unit():
    vocab = Vocabulary()
    phi = parse_formula("p", vocab)
    res = oracle_solve(ProblemInstance.sep(phi, Not(phi)))
    p = vocab.get("p")
    assert res.total_size == 1
    assert (CnfFormula.of([unit(p)]), CNF_TOP, CNF_TOP) in res.optima


def test_oracle_sep_error_when_overlapping():
    vocab = Vocabulary()
    phi = parse_formula("p", vocab)
    res = oracle_solve(ProblemInstance.sep(phi, phi))
    assert res.status == "error"


def test_oracle_sep_unsat_phi_under_terms_shape():
    # with phi unsatisfiable the cheapest CNF separator is the empty clause,
    # but a partial assignment cannot express falsum: the terms answer is a
    # literal opposing psi, or error when psi is a tautology
    vocab = Vocabulary()
    phi = parse_formula("p & !p", vocab)
    cnf_res = oracle_solve(ProblemInstance.sep(phi, parse_formula("!p", vocab)))
    assert cnf_res.total_size == 0 and (CNF_BOTTOM, CNF_TOP, CNF_TOP) in cnf_res.optima
    term_res = oracle_solve(ProblemInstance.sep(phi, parse_formula("!p", vocab)), shape="terms")
    assert term_res.status == "ok" and term_res.total_size == 1
    p = vocab.get("p")
    assert (CnfFormula.of([unit(p)]), CNF_TOP, CNF_TOP) in term_res.optima
    taut_res = oracle_solve(ProblemInstance.sep(phi, parse_formula("p | !p", vocab)), shape="terms")
    assert taut_res.status == "error"


def test_oracle_sep_counting_example_minimum_six():
    _, (p, q, r), phi, psi = _counting_instance()
    res = oracle_solve(ProblemInstance.sep(phi, psi))
    assert res.total_size == 6
    expected_theta = CnfFormula.of(
        [clause((p, False), (r, False)), clause((q, False), (r, False)), clause((p, False), (q, False))]
    )
    assert (expected_theta, CNF_TOP, CNF_TOP) in res.optima


def test_oracle_gce_counting_example_eighteen():
    _, (p, q, r), phi, psi = _counting_instance()
    res = oracle_solve(ProblemInstance.gce(phi, psi))
    assert (res.total_size, res.chi_size) == (18, 6)
    theta = CnfFormula.of(
        [clause((p, False), (r, False)), clause((q, False), (r, False)), clause((p, False), (q, False))]
    )
    theta_prime = CnfFormula.of(
        [clause((p, True), (r, True)), clause((q, True), (r, True)), clause((p, True), (q, True))]
    )
    chi = CnfFormula.of(
        [
            clause((p, False), (q, False), (r, False)),
            clause((p, True), (q, True), (r, True)),
        ]
    )
    assert res.optima == ((theta, theta_prime, chi),)


def test_oracle_budget_errors_are_distinct_from_semantic_error():
    vocab = Vocabulary()
    phi = parse_formula("p", vocab)
    with pytest.raises(OracleBudgetError):
        oracle_solve(ProblemInstance.gce(phi, Not(phi)), EnumerationBudget(max_total_size=1))
    big = Vocabulary([f"x{i}" for i in range(13)])
    f = parse_formula(" & ".join(s.name for s in big.symbols()), big)
    with pytest.raises(OracleBudgetError):
        oracle_solve(ProblemInstance.gce(f, Not(f)))


def test_oracle_unsat_s_is_legal_for_cd():
    vocab = Vocabulary()
    s = [parse_formula("p & !p", vocab)]
    res = oracle_solve(ProblemInstance.cd(s, parse_formula("p", vocab), parse_formula("q", vocab)))
    assert res.status == "ok"
    assert res.total_size == 0
    for theta, theta_prime, chi in res.optima:
        assert not sat.is_satisfiable(theta, chi)
        assert not sat.is_satisfiable(theta_prime, chi)


def test_oracle_optima_verified_independently_by_sat_engine():
    # truth tables decide the search; the DPLL engine re-checks the winners
    vocab, (p, q, r), phi, psi = _counting_instance()
    s = [parse_formula(t, vocab) for t in ("p", "q", "!r")]
    sp = [parse_formula(t, vocab) for t in ("p", "!q", "!r")]
    cases = [
        ProblemInstance.ce(s, sp, phi, psi),
        ProblemInstance.gce(phi, psi),
        ProblemInstance.cce(s, phi, psi),
        ProblemInstance.cd(s, phi, psi),
    ]
    for inst in cases:
        res = oracle_solve(inst)
        assert res.status == "ok"
        for theta, theta_prime, chi in res.optima:
            if inst.kind in ("ce", "cce", "cd"):
                assert sat.entails(inst.s, (theta, chi))
            assert sat.entails((theta, chi), inst.left_target)
            assert sat.entails((theta_prime, chi), inst.right_target)
            if inst.kind == "gce":
                assert sat.equivalent((theta, chi), (inst.left_target,))
                assert sat.equivalent((theta_prime, chi), (inst.right_target,))
            if inst.kind == "ce":
                assert sat.entails(inst.s_prime, (theta_prime, chi))
            if inst.kind == "cd":
                assert sat.equivalent((theta, chi), inst.s)
            if inst.kind in ("cce", "cd"):
                assert sat.is_satisfiable(theta_prime, chi) == sat.is_satisfiable(*inst.s)


def test_oracle_cd_flip_set_matches_min_flip_cardinality():
    # full-assignment S with psi = !phi: theta' & chi defines s-triangle-lambda
    # for a cardinality-minimal lambda
    rng = random.Random(31337)
    vocab = Vocabulary(["a", "b", "c"])
    syms = vocab.symbols()
    checked = 0
    while checked < 12:
        s = PartialAssignment.of({sym: rng.random() < 0.5 for sym in syms})
        s_term = s.to_term()
        phi = random_formula(rng, syms, rng.randint(1, 6))
        if not sat.entails([s_term], phi) or sat.entails([], phi):
            continue
        inst = ProblemInstance.cd(
            tuple(l.to_formula() for l in s.literals()), phi, Not(phi)
        )
        res = oracle_solve(inst)
        assert res.status == "ok"
        flip = oracle_min_flip(s, Not(phi))
        s_map = s.as_dict()
        for _, theta_prime, chi in res.optima:
            foil_model = {}
            for sym in syms:
                from contrastix.formula import Atom

                if sat.entails((theta_prime, chi), Atom(sym)):
                    foil_model[sym] = True
                elif sat.entails((theta_prime, chi), Not(Atom(sym))):
                    foil_model[sym] = False
            assert len(foil_model) == len(syms)  # a full-assignment input forces totality
            distance = sum(1 for sym in syms if foil_model[sym] != s_map[sym])
            assert distance == flip.cardinality
        checked += 1


def test_oracle_json_dump_golden():
    vocab = Vocabulary()
    s = (parse_formula("p", vocab), parse_formula("q", vocab))
    res = oracle_solve(ProblemInstance.cd(s, parse_formula("p", vocab), parse_formula("!p", vocab)))
    assert res.to_json_dict() == {
        "status": "ok",
        "theta": "(p)",
        "theta_prime": "(!p)",
        "chi": "(q)",
        "total_size": 3,
        "chi_size": 1,
        "optimal": True,
        "verification": None,
        "all_optima": [["(p)", "(!p)", "(q)"]],
    }


# --- cross-check against the dumb reference ------------------------------------

def _tiny_instances():
    vocab = Vocabulary(["p", "q"])
    p = parse_formula("p", vocab)
    q = parse_formula("q", vocab)
    notp = parse_formula("!p", vocab)
    pq = parse_formula("p & q", vocab)
    porq = parse_formula("p | q", vocab)
    yield ProblemInstance.gce(p, notp)
    yield ProblemInstance.gce(porq, pq)
    yield ProblemInstance.gce(p, q)
    yield ProblemInstance.sep(p, notp)
    yield ProblemInstance.sep(pq, parse_formula("!p & !q", vocab))
    yield ProblemInstance.ce([p, q], [notp, q], p, notp)
    yield ProblemInstance.cce([pq], p, notp)
    yield ProblemInstance.cce([p], p, notp)
    yield ProblemInstance.cd([p, q], p, notp)
    yield ProblemInstance.cd([pq], porq, parse_formula("!p & !q", vocab))


@pytest.mark.parametrize("shape", ["cnf", "terms"])
def test_oracle_matches_dumb_reference_on_tiny_instances(shape):
    for inst in _tiny_instances():
        expected = reference_solve(inst, max_total=4, shape=shape)
        got = oracle_solve(inst, shape=shape)
        if expected is None:
            assert got.status == "error" or got.total_size > 4
            continue
        total, chi_size, optima = expected
        assert got.status == "ok"
        assert (got.total_size, got.chi_size) == (total, chi_size)
        assert frozenset(got.optima) == optima


def test_oracle_random_instances_match_reference():
    rng = random.Random(20240817)
    vocab = Vocabulary(["a", "b"])
    syms = vocab.symbols()
    checked = 0
    for _ in range(40):
        kind = rng.choice(["gce", "sep", "cce", "cd", "ce"])
        phi = random_formula(rng, syms, rng.randint(1, 4))
        psi = random_formula(rng, syms, rng.randint(1, 4))
        if kind == "gce":
            inst = ProblemInstance.gce(phi, psi)
        elif kind == "sep":
            inst = ProblemInstance.sep(phi, psi)
        elif kind == "ce":
            inst = ProblemInstance.ce(
                [random_formula(rng, syms, 2)], [random_formula(rng, syms, 2)], phi, psi
            )
        elif kind == "cce":
            inst = ProblemInstance.cce([random_formula(rng, syms, 2)], phi, psi)
        else:
            inst = ProblemInstance.cd([random_formula(rng, syms, 2)], phi, psi)
        expected = reference_solve(inst, max_total=4)
        got = oracle_solve(inst)
        if expected is None:
            assert got.status == "error" or got.total_size > 4
            continue
        total, chi_size, optima = expected
        assert got.status == "ok", (kind, str(phi), str(psi))
        assert (got.total_size, got.chi_size) == (total, chi_size)
        assert frozenset(got.optima) == optima
        checked += 1
    assert checked >= 15


# --- oracle_min_flip -------------------------------------------------------------

def test_min_flip_single():
    vocab = Vocabulary(["p", "q"])
    p, q = vocab.symbols()
    s = PartialAssignment.of({p: True, q: True})
    flip = oracle_min_flip(s, Not(parse_formula("p", vocab)))
    assert flip is not None
    assert flip.cardinality == 1
    assert [str(l) for l in flip.literals] == ["p"]


def test_min_flip_zero_when_already_satisfied():
    vocab = Vocabulary(["p", "q"])
    p, q = vocab.symbols()
    s = PartialAssignment.of({p: True, q: False})
    flip = oracle_min_flip(s, parse_formula("p | q", vocab))
    assert flip is not None and flip.cardinality == 0


def test_min_flip_none_for_unsatisfiable_target():
    vocab = Vocabulary(["p"])
    (p,) = vocab.symbols()
    s = PartialAssignment.of({p: True})
    assert oracle_min_flip(s, parse_formula("p & !p", vocab)) is None


def test_min_flip_cardinality_equals_min_hamming_distance():
    rng = random.Random(99)
    vocab = Vocabulary(["a", "b", "c", "d"])
    syms = vocab.symbols()
    for _ in range(40):
        target = random_formula(rng, syms, rng.randint(1, 6))
        s = PartialAssignment.of({sym: rng.random() < 0.5 for sym in syms})
        flip = oracle_min_flip(s, target)
        models = brute_models(target, syms)
        if not models:
            assert flip is None
            continue
        s_map = {sym.id: value for sym, value in s.bindings}
        expected = min(sum(m[i] != s_map[i] for i in s_map) for m in models)
        assert flip is not None and flip.cardinality == expected


def test_min_flip_sigma2_construction():
    # n pairs (p_i, p_i^d), all-false start; target forces one of each pair up.
    vocab = Vocabulary(["p1", "pd1", "p2", "pd2"])
    p1, pd1, p2, pd2 = vocab.symbols()
    s = PartialAssignment.of({p1: False, pd1: False, p2: False, pd2: False})
    xi = parse_formula("p1", vocab)
    target = parse_formula("(p1 | pd1) & (p2 | pd2)", vocab) & xi
    flip = oracle_min_flip(s, target)
    assert flip is not None and flip.cardinality == 2
    unsat_xi = parse_formula("p1 & !p1", vocab)
    assert oracle_min_flip(s, parse_formula("(p1 | pd1) & (p2 | pd2)", vocab) & unsat_xi) is None


def test_min_flip_requires_total_assignment():
    vocab = Vocabulary(["p", "q"])
    p, _ = vocab.symbols()
    s = PartialAssignment.of({p: True})
    with pytest.raises(ValueError):
        oracle_min_flip(s, parse_formula("p | q", vocab))
