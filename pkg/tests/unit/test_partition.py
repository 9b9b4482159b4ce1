"""
Unit tests for Partition Module

Tests validation, p-regularity, conjugation, residues, contents,
addable/removable nodes, basic spin partitions and enumeration.
"""

import pytest

from partmod.partition import (
    ContentVector,
    Node,
    Partition,
    add_node,
    addable_nodes,
    basic_spin,
    conjugate,
    content,
    enumerate_p_regular,
    hook_length_count,
    is_p_core,
    is_p_regular,
    pairs,
    parse_partition,
    partitions_of,
    removable_nodes,
    remove_node,
    residue,
    same_block,
    validate,
)
from partmod.utils.errors import LabelSyntaxError, NotAPartition, OutOfRange, SizeMismatch


@pytest.mark.unit
class TestValidate:
    """测试分拆合法性检查"""

    def test_well_formed(self):
        """测试弱递减正整数序列"""
        la = validate([5, 3, 1])
        assert la == Partition((5, 3, 1))
        assert la.size == 9
        assert la.height == 3

    def test_increasing_rejected(self):
        """测试递增序列被拒绝并报告下标"""
        with pytest.raises(NotAPartition) as exc_info:
            validate([3, 4])
        assert exc_info.value.index == 1

    def test_non_positive_rejected(self):
        """测试含 0 的序列被拒绝"""
        with pytest.raises(NotAPartition):
            validate([2, 0])

    def test_empty_partition(self):
        """测试空分拆"""
        la = validate([])
        assert la.size == 0
        assert la.height == 0
        assert str(la) == "-"

    def test_part_beyond_height_reads_zero(self):
        """测试超出高度的部分读作 0"""
        la = Partition((3, 1))
        assert la.part(1) == 3
        assert la.part(2) == 1
        assert la.part(5) == 0

    def test_node_membership(self):
        """测试结点属于 Young 图"""
        la = Partition((3, 1))
        assert Node(1, 3) in la
        assert Node(2, 1) in la
        assert Node(2, 2) not in la
        assert len(list(la.nodes())) == 4


@pytest.mark.unit
class TestPRegularity:
    """测试 p-正则性"""

    @pytest.mark.parametrize("parts,p,expected", [
        ((2, 2, 1), 2, False),
        ((4, 3, 3, 1), 3, True),
        ((5, 3, 1), 2, True),
        ((1, 1, 1), 3, False),
        ((), 2, True),
    ])
    def test_is_p_regular(self, parts, p, expected):
        """测试是否有部分重复 p 次"""
        assert is_p_regular(Partition(parts), p) is expected

    def test_characteristic_must_be_at_least_two(self):
        """测试 p < 2 被拒绝"""
        with pytest.raises(OutOfRange):
            is_p_regular(Partition((1,)), 1)


@pytest.mark.unit
class TestConjugate:
    """测试共轭分拆"""

    def test_conjugate(self, P):
        """测试 (3,1)′ = (2,1,1)"""
        assert conjugate(P(3, 1)) == P(2, 1, 1)

    def test_self_conjugate(self, P):
        """测试自共轭分拆"""
        assert conjugate(P(4, 2, 1, 1)) == P(4, 2, 1, 1)

    def test_single_row(self, P):
        """测试 (n)′ = (1^n)"""
        assert conjugate(P(5)) == P(1, 1, 1, 1, 1)

    def test_involution(self):
        """测试共轭是对合"""
        for la in partitions_of(8):
            assert conjugate(conjugate(la)) == la


@pytest.mark.unit
class TestResidueAndContent:
    """测试剩余类与 content"""

    @pytest.mark.parametrize("row,col,p,expected", [
        (2, 5, 3, 0),
        (1, 1, 2, 0),
        (4, 1, 2, 1),
    ])
    def test_residue(self, row, col, p, expected):
        """测试 res(a,b) = (b - a) mod p"""
        assert residue(Node(row, col), p) == expected

    def test_content(self, P):
        """测试 content 向量"""
        assert content(P(3, 1), 2) == ContentVector((2, 2))
        assert content(P(4, 2), 3) == ContentVector((3, 1, 2))

    def test_empty_content(self):
        """测试空分拆的 content 全为 0"""
        assert content(Partition(()), 5).counts == (0, 0, 0, 0, 0)

    def test_same_block(self, P):
        """测试块判定"""
        assert same_block(P(5, 3), P(7, 1), 2)
        assert same_block(P(4, 2), P(4, 2), 3)
        assert not same_block(P(5), P(4, 1), 2)

    def test_same_block_size_mismatch(self, P):
        """测试大小不同时抛出 SizeMismatch"""
        with pytest.raises(SizeMismatch):
            same_block(P(5), P(3, 1), 2)

    def test_content_shift(self):
        """测试 content 平移"""
        vector = ContentVector((2, 2))
        assert vector.shifted(1, -1) == ContentVector((2, 1))
        assert vector.size == 4
        assert vector.p == 2


@pytest.mark.unit
class TestNodes:
    """测试可加/可去结点"""

    def test_removable_nodes(self, P):
        """测试可去结点按行从上到下"""
        assert removable_nodes(P(5, 3, 1)) == [Node(1, 5), Node(2, 3), Node(3, 1)]

    def test_addable_nodes(self, P):
        """测试可加结点包括第 h+1 行"""
        assert addable_nodes(P(5, 3, 1)) == [Node(1, 6), Node(2, 4), Node(3, 2), Node(4, 1)]

    def test_addable_nodes_of_empty(self):
        """测试空分拆只有 (1,1) 可加"""
        assert addable_nodes(Partition(())) == [Node(1, 1)]
        assert removable_nodes(Partition(())) == []

    def test_add_remove_roundtrip(self):
        """测试添加再去掉同一结点回到原分拆"""
        for la in partitions_of(7):
            for node in addable_nodes(la):
                assert remove_node(add_node(la, node), node) == la

    def test_addable_count_is_removable_plus_one(self):
        """测试可加结点比可去结点多一个"""
        for la in partitions_of(9):
            assert len(addable_nodes(la)) == len(removable_nodes(la)) + 1

    def test_remove_non_removable_node(self, P):
        """测试去掉非行末结点抛出 NotAPartition"""
        with pytest.raises(NotAPartition):
            remove_node(P(3, 1), Node(1, 2))

    def test_add_non_addable_node(self, P):
        """测试添加非可加结点抛出 NotAPartition"""
        with pytest.raises(NotAPartition):
            add_node(P(3, 1), Node(2, 3))


@pytest.mark.unit
class TestBasicSpin:
    """测试基本旋量分拆"""

    @pytest.mark.parametrize("n,expected", [
        (3, (2, 1)),
        (6, (4, 2)),
        (8, (5, 3)),
        (9, (5, 4)),
    ])
    def test_basic_spin(self, n, expected):
        """测试 β_n = (⌈(n+1)/2⌉, ⌊(n-1)/2⌋)"""
        assert basic_spin(n) == Partition(expected)

    def test_basic_spin_is_two_regular(self):
        """测试 β_n 是 2-正则的"""
        for n in range(3, 30):
            la = basic_spin(n)
            assert la.size == n
            assert is_p_regular(la, 2)

    def test_small_n_rejected(self):
        """测试 n < 3 被拒绝"""
        with pytest.raises(OutOfRange):
            basic_spin(2)


@pytest.mark.unit
class TestEnumeration:
    """测试 p-正则分拆枚举"""

    def test_two_regular_of_five(self, P):
        """测试 5 的 2-正则分拆"""
        assert list(enumerate_p_regular(5, 2)) == [P(5), P(4, 1), P(3, 2)]

    def test_three_regular_of_five(self, P):
        """测试 5 的 3-正则分拆，字典序降序"""
        assert list(enumerate_p_regular(5, 3)) == [P(5), P(4, 1), P(3, 2), P(3, 1, 1), P(2, 2, 1)]

    def test_zero(self):
        """测试 n = 0 只有空分拆"""
        assert list(enumerate_p_regular(0, 3)) == [Partition(())]

    def test_matches_filtered_partitions(self):
        """测试枚举结果等于过滤后的全部分拆"""
        for p in (2, 3, 5):
            for n in range(0, 13):
                expected = [la for la in partitions_of(n) if is_p_regular(la, p)]
                assert list(enumerate_p_regular(n, p)) == expected

    def test_partition_counts(self):
        """测试分拆总数"""
        assert [len(list(partitions_of(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_descending_order(self):
        """测试输出严格字典序降序"""
        items = list(enumerate_p_regular(12, 3))
        assert items == sorted(items, reverse=True)
        assert len(set(items)) == len(items)

    def test_negative_n_rejected(self):
        """测试负数 n 被拒绝"""
        with pytest.raises(OutOfRange):
            list(enumerate_p_regular(-1, 2))


@pytest.mark.unit
class TestParsing:
    """测试分拆文本格式"""

    def test_parse(self, P):
        """测试解析 "5,3,1" """
        assert parse_partition("5,3,1") == P(5, 3, 1)
        assert parse_partition(" 7 ") == P(7)

    def test_empty_spelled_dash(self):
        """测试空分拆写作 "-" """
        assert parse_partition("-") == Partition(())

    def test_zero_rejected(self):
        """测试 "0" 不表示空分拆"""
        with pytest.raises(NotAPartition):
            parse_partition("0")

    @pytest.mark.parametrize("text", ["", "5;3", "a,b", "5,,3"])
    def test_bad_syntax(self, text):
        """测试无法解析的文本"""
        with pytest.raises(LabelSyntaxError):
            parse_partition(text)

    def test_format_roundtrip(self):
        """测试格式化后可以解析回来"""
        for la in partitions_of(6):
            assert parse_partition(str(la)) == la


@pytest.mark.unit
class TestHooks:
    """测试钩长"""

    def test_hook_length_count(self, P):
        """测试钩长公式"""
        assert hook_length_count(P(2, 1)) == 2
        assert hook_length_count(P(4, 2)) == 9
        assert hook_length_count(P(6)) == 1

    def test_p_core(self, P):
        """测试 (4,2,1,1) 是 3-core"""
        assert is_p_core(P(4, 2, 1, 1), 3)
        assert not is_p_core(P(3), 3)

    def test_pairs(self):
        """测试两两分组末尾补 0"""
        assert list(pairs([5, 3, 1])) == [(5, 3), (1, 0)]
        assert list(pairs([])) == []
