import _blockwitness as bw


def test_partition_basics():
    assert bw.enumerate_partitions(4) == [
        [4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert bw.conjugate([4, 2, 1]) == [3, 2, 1, 1]
    assert sorted(bw.hook_multiset([2, 1])) == [1, 1, 3]
    assert bw.degree_sn([2] + [1] * 10) == 11
    assert bw.degree_valuation_sn([2, 1], 2) == 1
    assert bw.e_core([2] + [1] * 10, 5) == [2]


def test_arith():
    assert bw.multiplicative_order(9, 13) == 3
    assert bw.d_p(7, 2) == 2
    assert bw.phi_value(4, 3) == 10
    assert bw.unipotent_degree_glu([1, 1, 1], 3, 1) == 27


def test_symbols():
    assert bw.symbol_rank_defect("(1 3 4 | 0 1)") == (5, 1)
    assert bw.symbol_e_core("(1 3 4 | 0 1)", 3) == "(2 | -)"
    assert bw.symbol_e_cocore("(7 | -)", 2) == "(1 | -)"
    assert bw.trivial_symbol("bc", 5) == "(5 | -)"


def test_blocks():
    assert bw.principal_block_sn([2] + [1] * 10, 5)
    assert not bw.principal_block_sn([2, 1], 2)
    assert len(bw.irr_pprime_principal_sn(4, 3)) == 3
    inter = bw.oracle_intersection_sn(4, 2, 3)
    assert inter == [[4], [1, 1, 1, 1]]


def test_witness_and_verify():
    assert bw.witness_partition_sn(12, 5) == [2] + [1] * 10
    rep = bw.verify_witness("sn", 12, 5)
    assert rep["status"] == "PASS"
    assert rep["object"] == "(2,1^10)"
    assert rep["degree"] == "11"

    rep = bw.verify_witness("gl", 7, 11, q=3)
    assert rep["status"] == "PASS"
    assert rep["object"] == "(3^2,1)"

    rep = bw.verify_witness("bc", 5, 13, q=3)
    assert rep["status"] == "PASS"
    assert rep["object"] == "(1 3 4 | 0 1)"


def test_selftest_quick():
    ok, out = bw.selftest(True)
    assert ok, out
