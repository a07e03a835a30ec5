import pytest

from conftest import K3, cnf, graph, make
from npsgames.core import enumerate_solutions, is_solution
from npsgames.errors import DecodeError, ModelPreconditionViolated, UnknownProblem
from npsgames.io import instance_from_doc, parse_text
from npsgames.problems.dimacs import parse_dimacs, write_dimacs
from npsgames.problems.payloads import CnfFormula
from npsgames.problems.registry import PROBLEMS, get_problem
from npsgames.reductions import get_reduction

REGISTRY_NAMES = [
    "sat-l", "sat-v", "3sat-l", "3sat-v", "vertex-cover", "independent-set", "clique-v", "clique-e",
    "dominating-set", "set-cover", "hitting-set", "fvs", "fas", "ufl", "p-center", "p-median",
    "subset-sum", "knapsack", "partition", "scheduling", "dham-path", "dham-cycle", "uham-cycle",
    "tsp", "steiner-tree",
]


def test_registry_names_present():
    assert set(REGISTRY_NAMES) <= set(PROBLEMS)
    assert "partition-1" in PROBLEMS


def test_unknown_problem():
    with pytest.raises(UnknownProblem):
        get_problem("graph-coloring")
    with pytest.raises(UnknownProblem):
        get_problem("mirror:sat-v")


# -- SAT ---------------------------------------------------------------------------


def test_sat_l_membership():
    inst = cnf("sat-l", 3, (-1, -2, 3))
    assert is_solution(inst, inst.mask_of(["~l1", "l2", "l3"]))
    assert not is_solution(inst, inst.mask_of(["l1", "~l1", "l2", "l3"]))


def test_sat_v_membership():
    inst = cnf("sat-v", 2, (1, 2), (-1, -2))
    assert is_solution(inst, inst.mask_of(["x1"]))
    assert not is_solution(inst, inst.mask_of(["x1", "x2"]))


def test_three_sat_rejects_long_clause():
    with pytest.raises(DecodeError):
        make("3sat-v", num_vars=4, clauses=[[1, 2, 3, 4]])


def test_literal_out_of_range():
    with pytest.raises(DecodeError):
        make("sat-v", num_vars=2, clauses=[[3]])


# -- graphs --------------------------------------------------------------------------


def test_graph_problems():
    assert is_solution(make("vertex-cover", graph=graph(3, K3), k=2), 0b011)
    assert is_solution(make("clique-v", graph=graph(3, K3), k=3), 0b111)
    assert is_solution(make("clique-e", graph=graph(3, K3), k=3), 0b111)
    assert not is_solution(make("clique-e", graph=graph(3, K3), k=2), 0b011)
    assert is_solution(make("independent-set", graph=graph(3, [(0, 1)]), k=2), 0b101)
    ds = make("dominating-set", graph=graph(4, [(0, 1), (0, 2), (0, 3)]), k=1)
    assert is_solution(ds, 0b0001) and not is_solution(ds, 0b0010)


def test_undirected_edges_normalised():
    inst = make("vertex-cover", graph=graph(2, [(1, 0)]), k=1)
    assert inst.payload.graph.edges == ((0, 1),)


def test_self_loop_rejected():
    with pytest.raises(DecodeError):
        make("vertex-cover", graph=graph(2, [(1, 1)]), k=1)


def test_set_systems():
    sc = make("set-cover", size=3, sets=[[0, 1], [1, 2]], k=2)
    assert is_solution(sc, 0b11)
    assert not is_solution(make("set-cover", size=3, sets=[[0, 1], [1, 2]], k=1), 0b01)
    hs = make("hitting-set", size=3, sets=[[0, 1], [1, 2]], k=1)
    assert is_solution(hs, hs.mask_of(["g1"]))


def test_feedback_sets():
    two_cycle = graph(2, [(0, 1), (1, 0)], directed=True)
    fas = make("fas", graph=two_cycle, k=1)
    assert is_solution(fas, fas.mask_of(["0>1"])) and not is_solution(fas, 0)
    fvs = make("fvs", graph=two_cycle, k=1)
    assert is_solution(fvs, fvs.mask_of(["v0"]))
    dag = make("fas", graph=graph(3, [(0, 1), (1, 2), (0, 2)], directed=True), k=0)
    assert is_solution(dag, 0)


# -- facility location ----------------------------------------------------------------


def test_facility_trivial():
    assert is_solution(make("ufl", service_cost=[[0]], open_cost=[0], k=0), 0b1)


def test_facility_empty_choice_fails():
    assert not is_solution(make("ufl", service_cost=[[0]], open_cost=[0], k=5), 0)
    assert not is_solution(make("p-median", service_cost=[[0]], p=1, k=5), 0)


def test_facility_from_vertex_cover():
    vc = make("vertex-cover", graph=graph(3, K3), k=2)
    center = get_reduction("vertex-cover", "p-center").apply(vc)
    median = get_reduction("vertex-cover", "p-median").apply(vc)
    cover, non_cover = 0b011, 0b001
    assert center.target.payload.k == 0 and center.target.payload.p == 2
    assert {c for row in center.target.payload.service_cost for c in row} == {0, 4}
    assert is_solution(center.target, center.embedding.image(cover))
    assert not is_solution(median.target, median.embedding.image(non_cover))


# -- numbers ----------------------------------------------------------------------------


def test_number_problems():
    ss = make("subset-sum", values=[1, 2, 3], target=3)
    assert is_solution(ss, ss.mask_of(["a2"]))
    kp = get_reduction("subset-sum", "knapsack").apply(ss)
    assert kp.target.payload.profits == kp.target.payload.values == (1, 2, 3)
    assert kp.target.payload.capacity == kp.target.payload.min_profit == 3
    assert is_solution(kp.target, kp.embedding.image(ss.mask_of(["a2"])))
    part = make("partition", values=[4, 4, 1, 2, 3])
    assert is_solution(part, part.mask_of(["a0", "a4"]))
    sched = make("scheduling", values=[4, 4, 1, 2, 3], target=7)
    assert is_solution(sched, sched.mask_of(["j0", "j4"]))
    assert not is_solution(sched, sched.mask_of(["j1", "j4"]))


def test_numbers_must_be_positive():
    with pytest.raises(DecodeError):
        make("subset-sum", values=[0, 2], target=2)


def test_sum_overflow_rejected():
    with pytest.raises(DecodeError):
        make("subset-sum", values=[2**62, 2**62], target=1)


# -- tours and trees ----------------------------------------------------------------------


def test_hamiltonian_problems():
    tri = graph(3, [(0, 1), (1, 2), (2, 0)], directed=True)
    assert is_solution(make("dham-cycle", graph=tri), 0b111)
    tsp = make("tsp", graph={"n": 3, "directed": False, "edges": [[0, 1, 0], [0, 2, 0], [1, 2, 0]]}, t=0)
    assert is_solution(tsp, 0b111)
    path = make("dham-path", graph=graph(3, [(0, 1), (1, 2), (2, 0)], directed=True), s=0, t=2)
    assert is_solution(path, path.mask_of(["0>1", "1>2"]))
    assert not is_solution(path, path.mask_of(["0>1", "1>2", "2>0"]))


def test_tsp_requires_complete_graph():
    with pytest.raises(DecodeError):
        make("tsp", graph={"n": 3, "directed": False, "edges": [[0, 1, 0], [1, 2, 0]]}, t=0)


def test_hamiltonian_cycle_degree():
    inst = make("uham-cycle", graph=graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
    for mask in enumerate_solutions(inst):
        assert bin(mask).count("1") == 4
        degree = [0] * 4
        for u, v in (inst.payload.edges[i] for i in range(6) if mask >> i & 1):
            degree[u] += 1
            degree[v] += 1
        assert degree == [2, 2, 2, 2]


def test_steiner_tree():
    path = graph(3, [(0, 1), (1, 2)])
    assert is_solution(make("steiner-tree", graph=path, terminals=[0, 2], k=2), 0b11)
    assert not is_solution(make("steiner-tree", graph=path, terminals=[0, 2], k=1), 0b11)


# -- DIMACS ----------------------------------------------------------------------------------


def test_dimacs_roundtrip():
    text = "c comment\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n"
    phi = parse_dimacs(text)
    assert phi == CnfFormula(3, ((1, -2), (2, 3, -1)))
    assert parse_dimacs(write_dimacs(phi)) == phi


@pytest.mark.parametrize(
    "text",
    ["1 2 0\n", "p cnf 2 2\n1 0\n", "p cnf 2 1\n1 2\n", "p cnf 2 1\n1 x 0\n", "p dnf 2 1\n1 0\n", "p cnf 1 1\n0\n"],
)
def test_dimacs_errors(text):
    with pytest.raises(DecodeError):
        parse_dimacs(text)


def test_dimacs_text_reads_as_sat_v():
    inst = instance_from_doc(parse_text("p cnf 2 1\n1 2 0\n"))
    assert inst.problem.name == "sat-v" and inst.width == 2
    with pytest.raises(DecodeError):
        instance_from_doc(parse_text("p cnf 2 1\n1 2 0\n"), "vertex-cover")


def test_codec_roundtrip_digest(one_clause):
    again = instance_from_doc(one_clause.document())
    assert again.digest() == one_clause.digest()


def test_codec_missing_payload():
    with pytest.raises(DecodeError):
        instance_from_doc({"problem": "sat-v"})
    with pytest.raises(DecodeError):
        instance_from_doc({"problem": "sat-v", "payload": {"num_vars": "two", "clauses": []}})


# -- model transforms ----------------------------------------------------------------------


def test_literal_model_of_vertex_cover():
    inst = make("literal:vertex-cover", graph=graph(3, K3), k=2)
    assert inst.labels == ("v0", "v1", "v2", "~v0", "~v1", "~v2")
    assert inst.mask_of(["v0", "v1", "~v2"]) in enumerate_solutions(inst)
    for mask in enumerate_solutions(inst):
        assert (mask & 0b111) ^ (mask >> 3) == 0b111


def test_dual_literal_vertex_cover_is_independent_set():
    dual = make("dual:literal:vertex-cover", graph=graph(3, K3), k=2)
    iset = make("literal:independent-set", graph=graph(3, K3), k=1)
    # the dual picks ~u exactly where the cover picks u, which is an independent set read on U
    assert enumerate_solutions(dual) == enumerate_solutions(iset)


def test_complement_model_relabels():
    inst = make("complement:sat-v", num_vars=1, clauses=[[1]])
    assert inst.labels == ("~x1",)
    assert enumerate_solutions(inst) == (0b1,)


def test_transform_preconditions():
    with pytest.raises(ModelPreconditionViolated):
        get_problem("dual:vertex-cover")
    with pytest.raises(ModelPreconditionViolated):
        get_problem("literal:sat-l")
    with pytest.raises(ModelPreconditionViolated):
        get_problem("complement:sat-l")
