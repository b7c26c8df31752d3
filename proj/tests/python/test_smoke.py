import _nonassoc as na


def test_counts():
    assert na.assoc_type_count(4, 1) == 5
    assert na.assoc_type_count(4, 2) == 40
    assert na.assoc_type_count(4, 4) == 320
    assert na.monomial_count(4, 1) == 120
    assert na.monomial_count(4, 2) == 960
    assert na.monomial_count(4, 4) == 7680


def test_act_and_substitute():
    assert na.act([2, 1], "mul(x1,x2)", ["mul"]) == "mul(x2,x1)"
    assert na.substitute("mul(x1,x2)", 2, "mul(x1,x2)", ["mul"]) == "mul(x1,mul(x2,x3))"


def test_expand_commutator():
    assert na.expand("commutator", "br(x1,x2)") == "mul(x1,x2) - mul(x2,x1)"


def test_catalog():
    assert "pre-malcev" in na.systems()
    assert "dendriform-commutator" in na.rules()
    pm = na.system_identities("pre-malcev")
    assert len(pm) == 1
    assert pm[0].count("mul") == 30  # 10 terms, 3 products each


def test_disuccessor_associativity():
    parts = na.disuccessor("mul(mul(x1,x2),x3) - mul(x1,mul(x2,x3))", ["mul"])
    assert len(parts) == 3


def test_consequence():
    pm = na.system_identities("pre-malcev")[0]
    assert na.is_consequence(pm, "pre-lie")


def test_new_identities_small():
    rep = na.find_new_identities("alt-dendriform", "dendriform-commutator", 3)
    assert rep.module_rank == 0


def test_rref_rank():
    assert na.rref_rank([["2", "4"], ["1", "2"]]) == 1
    assert na.rref_rank([["1", "0"], ["0", "1"]]) == 2


def test_lifting_module_rank_small():
    assert na.lifting_module_rank("pre-lie", 4) > 0
