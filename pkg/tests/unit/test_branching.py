"""
Unit tests for Branching Module

Tests reduced signatures, crystal operators, JS criteria,
restriction multiplicities and the two-row restriction formula.
"""

import random

import pytest

from partmod.branching import (
    base_p_digits,
    conormal_count,
    conormal_nodes,
    e_tilde,
    f_tilde,
    is_js,
    is_js_by_signature,
    is_js_closed_form,
    normal_count,
    normal_nodes,
    reduce_signature,
    restriction_blocks,
    restriction_multiplicity,
    signature,
    two_row_restriction,
)
from partmod.branching.models import ADDABLE, REMOVABLE, SignedNode
from partmod.partition import Node, Partition, content, enumerate_p_regular, removable_nodes
from partmod.utils.errors import (
    IrregularInput,
    IrregularResult,
    NotEnoughConormalNodes,
    NotEnoughNormalNodes,
    NotNormal,
    OutsideLemmaScope,
    PreconditionViolated,
)


@pytest.mark.unit
class TestSignature:
    """测试约化 i-签名"""

    def test_three_one_residue_zero(self, P):
        """测试 (3,1), p=2, i=0 的签名为 "-++" """
        report = signature(P(3, 1), 2, 0)
        assert "".join(e.sign for e in report.sequence) == "-++"
        assert report.normal_nodes == (Node(1, 3),)
        assert report.conormal_nodes == (Node(2, 2), Node(3, 1))
        assert report.epsilon == 1
        assert report.phi == 2

    def test_five_three_one(self, P):
        """测试 (5,3,1), p=2 两个剩余类的签名"""
        zero = signature(P(5, 3, 1), 2, 0)
        assert zero.epsilon == 1
        assert zero.good == Node(1, 5)

        one = signature(P(5, 3, 1), 2, 1)
        assert one.epsilon == 0
        assert one.phi == 2
        assert one.conormal_nodes == (Node(3, 2), Node(4, 1))
        assert one.good is None
        assert one.cogood == Node(3, 2)

    def test_two_one_both_removables_normal(self, P):
        """测试 (2,1), p=2, i=1 两个可去结点都是正规的"""
        report = signature(P(2, 1), 2, 1)
        assert report.epsilon == 2
        assert report.good == Node(2, 1)

    def test_irregular_input(self, P):
        """测试非 p-正则输入被拒绝"""
        with pytest.raises(IrregularInput):
            signature(P(2, 2), 2, 0)

    def test_to_dict_fields(self, P):
        """测试机器格式字段"""
        row = signature(P(3, 1), 2, 0).to_dict()
        assert list(row) == ["residue", "sequence", "epsilon", "phi", "good", "cogood"]
        assert row["good"] == [1, 3]
        assert row["cogood"] == [2, 2]
        assert row["sequence"] == ["-(1,3)", "+(2,2)", "+(3,1)"]

    def test_reduction_is_order_independent(self):
        """测试随机顺序消去 "+-" 得到相同结果"""
        rng = random.Random(20240517)
        for _ in range(200):
            signs = [rng.choice([ADDABLE, REMOVABLE]) for _ in range(rng.randint(0, 12))]
            entries = [SignedNode(Node(row + 1, 1), sign) for row, sign in enumerate(signs)]
            expected = "".join(e.sign for e in reduce_signature(entries))

            text = "".join(signs)
            while "+-" in text:
                positions = [k for k in range(len(text) - 1) if text[k:k + 2] == "+-"]
                k = rng.choice(positions)
                text = text[:k] + text[k + 2:]
            assert text == expected

    def test_reduced_form_shape(self):
        """测试约化后的签名形如 -...-+...+"""
        for la in enumerate_p_regular(9, 3):
            for i in range(3):
                signs = "".join(e.sign for e in signature(la, 3, i).reduced)
                assert "+-" not in signs


@pytest.mark.unit
class TestNodeCounts:
    """测试正规与余正规结点计数"""

    def test_counts(self, P):
        """测试具体例子"""
        assert normal_count(P(5, 3, 1), 2) == 1
        assert conormal_count(P(5, 3, 1), 2) == 2
        assert normal_count(P(2, 1), 2) == 2
        assert conormal_count(P(2, 1), 2) == 3

    def test_split_js_conormal_nodes_are_bottom_addables(self, P):
        """测试 (5,3,1), p=2 的余正规结点是最下方两个可加结点，剩余类都是 1"""
        assert normal_nodes(P(5, 3, 1), 2) == [Node(1, 5)]
        assert conormal_nodes(P(5, 3, 1), 2) == [Node(3, 2), Node(4, 1)]

    def test_single_row(self, P):
        """测试 (n) 恰有一个正规结点、两个余正规结点"""
        for p in (2, 3, 5):
            for n in range(1, 12):
                assert normal_count(P(n), p) == 1
                assert conormal_count(P(n), p) == 2

    def test_five_two_one_normal_nodes(self, P):
        """测试 (5,2,1), p=2 的正规结点"""
        assert normal_nodes(P(5, 2, 1), 2) == [Node(1, 5), Node(2, 2), Node(3, 1)]
        assert normal_count(P(5, 2, 1), 2) == 3

    def test_conormal_excess(self):
        """测试余正规结点总比正规结点多一个"""
        for p in (2, 3, 5):
            for n in range(0, 13):
                for la in enumerate_p_regular(n, p):
                    assert conormal_count(la, p) == normal_count(la, p) + 1

    def test_js_normal_node_is_top_removable(self):
        """测试 JS 分拆唯一的正规结点是最上方的可去结点"""
        for p in (2, 3):
            for n in range(1, 13):
                for la in enumerate_p_regular(n, p):
                    if normal_count(la, p) == 1:
                        assert normal_nodes(la, p) == [removable_nodes(la)[0]]


@pytest.mark.unit
class TestCrystalOperators:
    """测试晶体算子 ẽ_i 与 f̃_i"""

    def test_e_tilde(self, P):
        """测试 ẽ 的具体例子"""
        assert e_tilde(P(3, 1), 2, 0) == P(2, 1)
        assert e_tilde(P(2, 1), 2, 1, 2) == P(1)
        assert e_tilde(P(5), 3, 1) == P(4)

    def test_f_tilde(self, P):
        """测试 f̃ 的具体例子"""
        assert f_tilde(P(3, 1), 2, 0) == P(3, 2)
        assert f_tilde(Partition(()), 3, 0) == P(1)

    def test_not_enough_normal_nodes(self, P):
        """测试 ε_i < r 时抛出异常"""
        with pytest.raises(NotEnoughNormalNodes):
            e_tilde(P(5, 3, 1), 2, 1)
        with pytest.raises(NotEnoughNormalNodes):
            e_tilde(P(3, 1), 2, 0, 2)

    def test_not_enough_conormal_nodes(self, P):
        """测试 φ_i < r 时抛出异常"""
        with pytest.raises(NotEnoughConormalNodes):
            f_tilde(P(3, 1), 2, 0, 3)

    def test_roundtrip(self):
        """测试 f̃^r ẽ^r λ = λ，且 ε、φ 按 r 平移"""
        for p in (2, 3):
            for n in range(1, 10):
                for la in enumerate_p_regular(n, p):
                    for i in range(p):
                        before = signature(la, p, i)
                        for r in range(1, before.epsilon + 1):
                            mu = e_tilde(la, p, i, r)
                            after = signature(mu, p, i)
                            assert f_tilde(mu, p, i, r) == la
                            assert after.epsilon == before.epsilon - r
                            assert after.phi == before.phi + r

    def test_results_stay_regular(self):
        """测试晶体算子保持 p-正则性"""
        regular = set(enumerate_p_regular(9, 3))
        for la in enumerate_p_regular(8, 3):
            for i in range(3):
                if signature(la, 3, i).phi == 0:
                    continue
                grown = f_tilde(la, 3, i)
                assert grown.size == 9
                assert grown in regular


@pytest.mark.unit
class TestJS:
    """测试 JS 判定"""

    @pytest.mark.parametrize("parts,p,expected", [
        ((5, 3, 1), 2, True),
        ((2, 1), 3, True),
        ((3, 1), 3, False),
        ((4, 1, 1), 3, True),
        ((5, 4), 2, False),
        ((7,), 3, True),
    ])
    def test_is_js(self, parts, p, expected):
        """测试具体例子"""
        assert is_js(Partition(parts), p) is expected

    def test_two_criteria_agree(self):
        """测试闭式判据与签名判据一致"""
        for p in (2, 3, 5):
            for n in range(1, 14):
                for la in enumerate_p_regular(n, p):
                    assert is_js_closed_form(la, p) == is_js_by_signature(la, p)

    def test_empty_partition_is_not_js(self):
        """测试空分拆不是 JS"""
        assert not is_js(Partition(()), 3)


@pytest.mark.unit
class TestRestrictionMultiplicity:
    """测试合成因子重数"""

    def test_bottom_normal_node(self, P):
        """测试 (2,1), p=2, A=(2,1)"""
        assert restriction_multiplicity(P(2, 1), 2, Node(2, 1)) == 2

    def test_irregular_result(self, P):
        """测试去掉 (1,2) 得到 (1,1) 不是 2-正则的"""
        with pytest.raises(IrregularResult):
            restriction_multiplicity(P(2, 1), 2, Node(1, 2))

    def test_top_normal_node(self, P):
        """测试 (3,2,1), p=3 的最上方正规结点"""
        la = P(3, 2, 1)
        top = normal_nodes(la, 3)[0]
        assert restriction_multiplicity(la, 3, top) == 1

    def test_js_unique_normal_node(self):
        """测试 JS 分拆唯一正规结点的重数为 1"""
        for la in enumerate_p_regular(10, 3):
            if is_js(la, 3):
                node = normal_nodes(la, 3)[0]
                assert restriction_multiplicity(la, 3, node) == 1

    def test_not_normal(self, P):
        """测试非正规结点被拒绝"""
        with pytest.raises(NotNormal):
            restriction_multiplicity(P(5, 3, 1), 2, Node(2, 3))


@pytest.mark.unit
class TestTwoRowRestriction:
    """测试两行限制公式"""

    def test_base_p_digits(self):
        """测试 p 进制低位在前"""
        assert base_p_digits(3, 2) == [1, 1]
        assert base_p_digits(0, 3) == []
        assert base_p_digits(11, 3) == [2, 0, 1]

    def test_five_two_char_two(self, P):
        """测试 (5,2), p=2"""
        certificate = two_row_restriction(P(5, 2), 2)
        assert certificate.t == 2
        assert certificate.delta == 0
        assert certificate.as_mapping() == {P(4, 2): 1, P(5, 1): 2, P(6): 2}

    def test_four_two_char_three(self, P):
        """测试 (4,2), p=3：(6,-1) 被丢弃"""
        certificate = two_row_restriction(P(4, 2), 3)
        assert certificate.t == 1
        assert certificate.delta == 1
        assert certificate.as_mapping() == {P(3, 2): 1, P(4, 1): 2}

    def test_outside_scope(self, P):
        """测试 t = 0 时抛出 OutsideLemmaScope"""
        with pytest.raises(OutsideLemmaScope):
            two_row_restriction(P(4, 1), 3)

    def test_precondition(self, P):
        """测试非两行或两行相等的输入被拒绝"""
        with pytest.raises(PreconditionViolated):
            two_row_restriction(P(5, 2, 1), 2)
        with pytest.raises(PreconditionViolated):
            two_row_restriction(P(3, 3), 3)

    def test_terms_are_regular_partitions_of_n_minus_one(self):
        """测试每一项都是 n-1 的 p-正则分拆，且主项在其为 p-正则时出现"""
        for p in (2, 3, 5):
            for n in range(3, 16):
                for la in enumerate_p_regular(n, p):
                    if la.height != 2 or la.part(1) == la.part(2):
                        continue
                    try:
                        certificate = two_row_restriction(la, p)
                    except OutsideLemmaScope:
                        continue
                    regular = set(enumerate_p_regular(n - 1, p))
                    assert all(term.partition in regular for term in certificate.terms)
                    main = Partition((la.part(1) - 1, la.part(2)))
                    if main in regular:
                        assert certificate.terms[0].partition == main

    def test_to_dict(self, P):
        """测试证书的机器格式"""
        row = two_row_restriction(P(5, 2), 2).to_dict()
        assert row["partition"] == "5,2"
        assert row["terms"][0] == {"partition": "4,2", "multiplicity": 1}


@pytest.mark.unit
class TestRestrictionBlocks:
    """测试 e_i D^λ 的块"""

    def test_blocks(self, P):
        """测试 (2,1), p=2 只有剩余类 1 的块"""
        blocks = restriction_blocks(P(2, 1), 2)
        assert len(blocks) == 1
        block = blocks[0]
        assert block.residue == 1
        assert block.head == P(2)
        assert block.multiplicity == 2
        assert block.content == content(P(2), 2)
        assert block.to_dict() == {"residue": 1, "content": [1, 1], "head": "2", "multiplicity": 2}
