import hermdec
import pytest


@pytest.fixture(scope="module")
def code():
    return hermdec.Code(q=2, u=4)


def test_code_parameters(code):
    assert (code.n, code.k, code.q, code.u) == (8, 4, 2, 4)
    assert code.information_set == [1, 2, 3, 5]


def test_encode_round_trip(code):
    msg = [code.parse_element(s) for s in ["1", "a^2", "0", "a"]]
    cw = code.encode(msg)
    assert [code.element_str(v) for v in cw] == ["1", "a^2", "0", "a", "a", "0", "0", "a"]
    assert code.extract_message(cw) == msg


def test_decode_from_multiplicities(code):
    M = [
        [3, 0, 0, 0, 2, 4, 5, 2],
        [2, 0, 3, 0, 0, 0, 0, 0],
        [0, 0, 0, 5, 1, 0, 0, 2],
        [0, 4, 0, 0, 0, 0, 0, 0],
    ]
    res = code.decode_multiplicities(M, 5)
    assert res["status"] == "decoded-from-list"
    assert res["message"] == [1, 3, 0, 2]
    assert res["chosen_score"] == 23
    assert len(res["candidates"]) == 2

    qp = code.q_polynomial(M, 5)
    assert (qp["N"], qp["w"], qp["l"]) == (76, 23, 5)
    roots = code.find_roots(qp["Q"])
    assert sorted(roots) == sorted(c["function"] for c in res["candidates"])


def test_soft_decode(code):
    cw = code.encode([1, 3, 0, 2])
    pi = [[0.05] * code.n for _ in range(4)]
    for i, s in enumerate(cw):
        pi[s][i] = 0.85
    res = code.decode(pi, L=2)
    assert res["message"] == [1, 3, 0, 2]


def test_simulation_runs(code):
    recs = code.simulate("qpsk", [4.0], frames=50, seed=1, L=2)
    assert len(recs) == 1
    assert recs[0]["frames"] == 50
    assert 0.0 <= recs[0]["fer"] <= 1.0
    again = code.simulate("qpsk", [4.0], frames=50, seed=1, L=2)
    assert again == recs


def test_dimension_lookup():
    assert hermdec.dimension_to_u(4, 32) == 37
