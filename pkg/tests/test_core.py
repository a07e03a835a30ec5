import pytest

from conftest import K3, cnf, graph, make
from npsgames.core import (
    Embedding,
    InstanceBundle,
    SEReduction,
    check_se_property,
    compose,
    enumerate_solutions,
    identity_reduction,
    is_partial_solution,
    is_solution,
    is_universe_covering,
    universe_covering_report,
)
from npsgames.errors import CapExceeded, EmbeddingNotInjective, NotNested, SpecMismatch, WidthMismatch
from npsgames.problems.registry import get_problem
from npsgames.reductions import get_reduction, parse_chain


# -- enumeration -----------------------------------------------------------------


def test_enumerate_unit_clause():
    assert enumerate_solutions(cnf("sat-v", 1, (1,))) == (0b1,)


def test_enumerate_contradiction_is_empty():
    assert enumerate_solutions(cnf("sat-v", 1, (1,), (-1,))) == ()


def test_enumerate_literal_clause_has_seven_members(one_clause):
    sols = enumerate_solutions(cnf("sat-l", 3, (-1, -2, 3)))
    assert len(sols) == 7
    # l1, l2, ~l3 is the one assignment violating the clause
    assert one_clause.mask_of(["l1", "l2", "~l3"]) not in sols


def test_enumerate_respects_cap():
    inst = cnf("sat-v", 6, (1, 2))
    with pytest.raises(CapExceeded):
        enumerate_solutions(inst, cap=4)


def test_enumerate_threads_same_result():
    inst = cnf("sat-v", 8, (1, 2, -3), (-1, 4), (5, -6, 7), (-8, 2))
    assert enumerate_solutions(inst, threads=3) == enumerate_solutions(inst)


# -- membership ----------------------------------------------------------------------


def test_vertex_cover_membership():
    inst = make("vertex-cover", graph=graph(3, K3), k=2)
    assert is_solution(inst, inst.mask_of(["v0", "v1"]))
    assert not is_solution(inst, inst.mask_of(["v0"]))


def test_partition_with_anchor():
    inst = make("partition", values=[4, 4, 1, 2, 3])
    assert is_solution(inst, inst.mask_of(["a0", "a4"]))
    assert not is_solution(inst, inst.mask_of(["a1", "a4"]))


def test_width_mismatch():
    inst = make("vertex-cover", graph=graph(3, K3), k=2)
    with pytest.raises(WidthMismatch):
        is_solution(inst, 1 << 3)
    with pytest.raises(WidthMismatch):
        is_solution(inst, -1)


# -- partial solutions -------------------------------------------------------------


def test_partial_empty_sets():
    assert is_partial_solution(cnf("sat-v", 2, (1, 2)), 0, 0)
    assert not is_partial_solution(cnf("sat-v", 1, (1,), (-1,)), 0, 0)


def test_partial_already_solution():
    inst = cnf("sat-v", 2, (1, 2))
    assert is_partial_solution(inst, 0b01, 0b11)


def test_partial_decided_false_blocks():
    inst = cnf("sat-v", 2, (1,), (2,))
    assert not is_partial_solution(inst, 0b00, 0b01)
    assert is_partial_solution(inst, 0b01, 0b01)


def test_partial_not_nested():
    with pytest.raises(NotNested):
        is_partial_solution(cnf("sat-v", 2, (1, 2)), 0b01, 0b10)


# -- SE check ----------------------------------------------------------------------


def test_single_clause_se_check(one_clause):
    report = check_se_property(get_reduction("3sat-l", "vertex-cover"), one_clause)
    assert report.passed
    assert len(report.embedded_images) == len(report.restricted_targets) == 7


def test_identity_passes():
    inst = make("vertex-cover", graph=graph(4, [(0, 1), (1, 2), (2, 3)]), k=2)
    report = check_se_property(identity_reduction(inst.problem), inst)
    assert report.passed and report.embedded_images == enumerate_solutions(inst)


def test_vacuous_equality():
    report = check_se_property(get_reduction("sat-l", "sat-v"), cnf("sat-l", 1, (1,), (-1,)))
    assert report.passed and report.source_solutions == report.target_solutions == 0


def _collapsing(problem):
    # maps l1 and ~l1 to the same target element
    def construct(payload):
        n = payload.num_vars
        table = list(range(2 * n))
        table[n] = 0
        return payload, table

    return SEReduction("broken", problem, problem, construct)


def test_broken_reduction_not_injective():
    red = _collapsing(get_problem("3sat-l"))
    with pytest.raises(EmbeddingNotInjective):
        check_se_property(red, cnf("3sat-l", 2, (1, 2)))


def test_embedding_range_checked():
    with pytest.raises(EmbeddingNotInjective):
        Embedding((0, 3), 3)
    emb = Embedding((2, 0), 4)
    assert emb.embedded == 0b101 and emb.auxiliary == 0b1010
    assert emb.image(0b11) == 0b101 and emb.preimage(0b1111) == 0b11


def test_witnesses_reported_on_failure():
    # clique-e accepts two disjoint 1-cliques, which no 2-clique of the source matches
    inst = make("clique-v", graph=graph(2, []), k=0)
    report = check_se_property(get_reduction("clique-v", "clique-e"), inst)
    assert not report.equal
    assert report.to_dict()["extra_in_target"]


# -- composition -------------------------------------------------------------------


def test_compose_chain_on_long_clause():
    inst = cnf("sat-l", 4, (1, 2, 3, 4))
    assert check_se_property(parse_chain("sat-l>3sat-l>vertex-cover"), inst).passed


@pytest.mark.parametrize("side", ["left", "right"])
def test_compose_identity_laws(side, one_clause):
    red = get_reduction("3sat-l", "vertex-cover")
    ident = identity_reduction(red.source if side == "left" else red.target)
    composed = compose(ident, red) if side == "left" else compose(red, ident)
    plain, lifted = red.apply(one_clause), composed.apply(one_clause)
    assert plain.target.digest() == lifted.target.digest()
    assert plain.embedding == lifted.embedding


def test_compose_associative(one_clause):
    a = get_reduction("3sat-l", "vertex-cover")
    b = get_reduction("vertex-cover", "set-cover")
    c = identity_reduction(b.target)
    left = compose(compose(a, b), c).apply(one_clause)
    right = compose(a, compose(b, c)).apply(one_clause)
    assert left.target.digest() == right.target.digest() and left.embedding == right.embedding


def test_compose_mismatch():
    with pytest.raises(SpecMismatch):
        compose(get_reduction("sat-l", "sat-v"), get_reduction("3sat-l", "vertex-cover"))


def test_apply_wrong_problem(one_clause):
    with pytest.raises(SpecMismatch):
        get_reduction("sat-l", "sat-v").apply(one_clause)


# -- universe covering -------------------------------------------------------------


def test_unanchored_partition_covers():
    assert is_universe_covering(make("partition-1", values=[1, 1, 2]))


def test_anchored_partition_does_not_cover():
    inst = make("partition", values=[4, 4, 1, 2, 3])
    report = universe_covering_report(inst)
    assert not report.covering
    # the second anchor never joins the first
    assert inst.names(inst.full & ~report.union) == ["a1"]


def test_vacuous_covering_flagged():
    report = universe_covering_report(cnf("sat-v", 1, (1,), (-1,)))
    assert report.covering and report.vacuous


def test_instance_labels_must_be_unique():
    spec = get_problem("sat-v")
    with pytest.raises(ValueError):
        InstanceBundle.of(type(spec)("dup", lambda p: ["a", "a"], spec.verify, spec.decode, spec.encode), None)
