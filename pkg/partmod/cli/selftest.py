"""
自检套件

每个套件按出处标签注册，返回 SuiteResult。`partmod selftest` 依次运行并打印通过/失败表。
"""

import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from loguru import logger

from config.computation import SelftestSettings
from partmod.alternating import (
    case_i_node_report,
    parse_label,
    split_js_diagnostics,
    splits,
)
from partmod.branching import (
    conormal_count,
    e_tilde,
    f_tilde,
    is_js,
    is_js_closed_form,
    normal_count,
    signature,
)
from partmod.classifier import Verdict, char2_exceptional_family, classify, classify_all
from partmod.mullineux import is_mullineux_fixed, mullineux, mullineux_by_symbol
from partmod.oracle import two_row_sweep, verify_case_i, verify_tensor_both_split
from partmod.partition import Partition, basic_spin, enumerate_p_regular
from partmod.utils.constants import SPLIT_HEIGHT_MIN_N, Citation
from partmod.utils.plugin_registry import PluginRegistry

suite_registry = PluginRegistry("SelftestSuite")


@dataclass
class SuiteResult:
    """一个套件的结果"""
    tag: str
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, failure: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(failure)

    def to_dict(self) -> dict:
        """elapsed 不进入数据流"""
        return {
            "tag": self.tag,
            "suite": self.name,
            "checked": self.checked,
            "failed": len(self.failures),
            "status": "pass" if self.passed else "FAIL",
            "first_failure": self.failures[0] if self.failures else "",
        }


def _sizes(max_n: int, cap: Optional[int], start: int = 0) -> range:
    return range(start, min(max_n, cap) + 1 if cap is not None else max_n + 1)


@suite_registry.register(Citation.CONORMAL_EXCESS, priority=100, description="conormal_count = normal_count + 1")
def conormal_excess(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    for p in (2, 3, 5):
        for n in _sizes(settings.signature_max_n, cap):
            for la in enumerate_p_regular(n, p):
                result.expect(conormal_count(la, p) == normal_count(la, p) + 1, f"{la} p={p}")


@suite_registry.register(Citation.JS_CLOSED_FORM, priority=95, description="closed-form JS ⇔ one normal node")
def js_equivalence(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    for p in (2, 3, 5):
        for n in _sizes(settings.signature_max_n, cap, start=1):
            for la in enumerate_p_regular(n, p):
                result.expect(is_js_closed_form(la, p) == (normal_count(la, p) == 1), f"{la} p={p}")


@suite_registry.register(Citation.CRYSTAL_INVERSE, priority=90, description="f̃^r ẽ^r = id with ε/φ shifts")
def crystal_roundtrip(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    for p in (2, 3):
        for n in _sizes(settings.crystal_max_n, cap, start=1):
            for la in enumerate_p_regular(n, p):
                for i in range(p):
                    before = signature(la, p, i)
                    for r in range(1, before.epsilon + 1):
                        mu = e_tilde(la, p, i, r)
                        after = signature(mu, p, i)
                        result.expect(
                            f_tilde(mu, p, i, r) == la
                            and after.epsilon == before.epsilon - r
                            and after.phi == before.phi + r,
                            f"{la} p={p} i={i} r={r}",
                        )


@suite_registry.register("Mullineux", priority=85, description="involution, identity at p=2, anchors")
def mullineux_involution(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    for p in (3, 5):
        for n in _sizes(settings.mullineux_max_n, cap):
            for la in enumerate_p_regular(n, p):
                image = mullineux(la, p)
                result.expect(
                    mullineux(image, p) == la and image.size == la.size, f"{la} p={p} -> {image}"
                )
    for n in _sizes(settings.identity_max_n, cap):
        for la in enumerate_p_regular(n, 2):
            result.expect(mullineux_by_symbol(la, 2) == la, f"{la} p=2")
    result.expect(mullineux(Partition((4, 3, 3, 2)), 3) == Partition((7, 5)), "(4,3,3,2)^M")
    result.expect(mullineux(Partition((7, 3, 2)), 3) == Partition((7, 3, 2)), "(7,3,2)^M")


@suite_registry.register(Citation.MULLINEUX_BRANCHING, priority=80, description="ε_i, φ_i compatibility with λ^M")
def mullineux_branching(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    p = 3
    for n in _sizes(settings.compatibility_max_n, cap, start=1):
        for la in enumerate_p_regular(n, p):
            image = mullineux(la, p)
            for i in range(p):
                j = (-i) % p
                eps = signature(la, p, i).epsilon
                ok = eps == signature(image, p, j).epsilon
                if ok and eps > 0:
                    ok = mullineux(e_tilde(la, p, i), p) == e_tilde(image, p, j)
                phi = signature(la, p, i).phi
                ok = ok and phi == signature(image, p, j).phi
                if ok and phi > 0:
                    ok = mullineux(f_tilde(la, p, i), p) == f_tilde(image, p, j)
                result.expect(ok, f"{la} i={i}")


def three_row_fixed_points(n: int) -> List[Partition]:
    """p = 3 的三行不动点；n > 6 时只保留 JS 分拆"""
    return [
        la for la in enumerate_p_regular(n, 3)
        if la.height == 3 and is_mullineux_fixed(la, 3) and (n <= 6 or is_js(la, 3))
    ]


@suite_registry.register(Citation.FIXED_FAMILY, priority=75, description="3-row fixed points at p=3")
def fixed_family(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    anchors = {6: Partition((4, 1, 1)), 12: Partition((7, 3, 2))}
    for n in _sizes(settings.fixed_family_max_n, cap, start=1):
        fixed = three_row_fixed_points(n)
        if n >= 6 and n % 6 == 0:
            result.expect(len(fixed) == 1, f"n={n}: {[str(x) for x in fixed]}")
            if n in anchors:
                result.expect(fixed == [anchors[n]], f"n={n}: {[str(x) for x in fixed]}")
        elif n >= 6:
            result.expect(not fixed, f"n={n}: {[str(x) for x in fixed]}")
    if cap is None or cap >= 9:
        fixed_nine = [la for la in enumerate_p_regular(9, 3) if is_mullineux_fixed(la, 3)]
        result.expect(not fixed_nine, f"n=9: {[str(x) for x in fixed_nine]}")


@suite_registry.register(Citation.BENSON, priority=70, description="splitting congruences")
def splitting_congruences(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    for n in _sizes(settings.splitting_max_n, cap, start=3):
        result.expect(splits(basic_spin(n), 2) == (n % 4 != 2), f"β_{n}")
        if n % 4 == 2 and n >= 6:
            for j in range((n - 6) // 4 + 1):
                family = char2_exceptional_family(n, j)
                result.expect(splits(family, 2), f"family n={n} j={j}: {family}")
    for p in (2, 3):
        for n in _sizes(min(settings.splitting_max_n, settings.signature_max_n), cap, start=1):
            for la in enumerate_p_regular(n, p):
                if not splits(la, p):
                    continue
                if p == 3 and n >= SPLIT_HEIGHT_MIN_N:
                    result.expect(la.height >= 3, f"{la} p=3 height")
                if is_js(la, p):
                    result.expect(split_js_diagnostics(la, p).passed, f"{la} p={p} diagnostics")


@suite_registry.register(Citation.TWO_ROW_RESTRICTION, priority=60, description="two-row restriction vs Gram ranks")
def two_row_oracle(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    max_n = settings.two_row_max_n if cap is None else min(settings.two_row_max_n, cap)
    for p in (2, 3):
        for check in two_row_sweep(p, max_n):
            result.expect(check.holds, f"{check.partition} p={p}: {check.lhs} != {check.rhs}")


CLASSIFY_EXAMPLES = [
    (2, 9, "5,3,1+", "8,1", Verdict.IRREDUCIBLE, "4,3,2"),
    (3, 6, "4,1,1+", "4,1,1-", Verdict.IRREDUCIBLE, "4,2"),
    (3, 6, "4,1,1+", "4,1,1+", Verdict.NOT_IRREDUCIBLE, None),
    (3, 6, "4,1,1+", "5,1", Verdict.NOT_IRREDUCIBLE, None),
    (2, 8, "5,3+", "5,2,1", Verdict.BASIC_SPIN_OPEN, None),
    (2, 9, "5,4+", "4,3,2", Verdict.NOT_IRREDUCIBLE, None),
    (2, 9, "5,4+", "8,1", Verdict.NOT_IRREDUCIBLE, None),
    (3, 7, "7", "6,1", Verdict.TRIVIAL, None),
]


@suite_registry.register(Citation.MAIN, priority=50, description="classifier instances and dimension identities")
def classifier_instances(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    for p, n, lhs, rhs, verdict, product in CLASSIFY_EXAMPLES:
        row = classify(p, n, parse_label(lhs, p), parse_label(rhs, p))
        expected_product = None if product is None else str(parse_label(product, p))
        actual_product = None if row.product is None else str(row.product)
        result.expect(
            row.verdict is verdict and actual_product == expected_product,
            f"{lhs} ⊗ {rhs} (p={p}): {row.verdict.value} {actual_product}",
        )
    if cap is None or cap >= 9:
        result.expect(bool(verify_case_i(Partition((5, 3, 1)), 2)), "dimension identity (5,3,1) p=2")
        result.expect(bool(verify_tensor_both_split()), "dimension identity (4,1,1)± p=3")


def coherence_failures(rows) -> List[str]:
    """全表扫描结果的形状检查"""
    failures = []
    for row in rows:
        p, n = row.p, row.n
        beta = basic_spin(n) if p == 2 else None
        if row.verdict is Verdict.BASIC_SPIN_OPEN and beta not in (row.lhs.partition, row.rhs.partition):
            failures.append(f"open without β_n: {row.lhs} ⊗ {row.rhs}")
        if row.verdict is not Verdict.IRREDUCIBLE:
            continue
        nu = row.product.partition
        if nu.size != n or splits(nu, p):
            failures.append(f"bad product {nu}: {row.lhs} ⊗ {row.rhs}")
        if Citation.CASE_I in row.citations:
            factor = row.lhs if row.lhs.variant.is_split else row.rhs
            if not split_js_diagnostics(factor.partition, p).passed:
                failures.append(f"diagnostics fail for {factor}")
            nodes = case_i_node_report(factor.partition, p)
            if not nodes.passed:
                failures.append(f"node report fails for {factor}: {[c.name for c in nodes.failed()]}")
            if p == 2 and nu.parts[-1] != 2:
                failures.append(f"product {nu} does not end in 2")
        elif row.product.partition != Partition((4, 2)):
            failures.append(f"unexpected product {nu}")
    return failures


@suite_registry.register("Thm 1 scan", priority=40, description="exhaustive classify_all coherence")
def exhaustive_scan(settings: SelftestSettings, result: SuiteResult, cap: Optional[int]) -> None:
    max_n = settings.scan_max_n if cap is None else min(settings.scan_max_n, cap)
    for p in (2, 3):
        for n in range(5, max_n + 1):
            rows = classify_all(p, n, max_n=max(max_n, n))
            failures = coherence_failures(rows)
            result.expect(not failures, f"p={p} n={n}: {failures[:1]}")


def run_suites(
    settings: SelftestSettings,
    tags: Optional[List[str]] = None,
    cap: Optional[int] = None,
) -> List[SuiteResult]:
    """
    运行自检套件

    Args:
        settings: 各套件的范围
        tags: 只运行这些标签（为空时使用配置中的 suites，再为空则全部）
        cap: 所有套件共同的 n 上限
    """
    selected = tags or settings.suites or suite_registry.list_names()
    results = []
    for tag in selected:
        suite: Optional[Callable] = suite_registry.get(tag)
        if suite is None:
            raise KeyError(f"未知的自检套件: {tag}（可用: {', '.join(suite_registry.list_names())}）")
        result = SuiteResult(tag=tag, name=suite.__name__)
        started = time.perf_counter()
        suite(settings, result, cap)
        result.elapsed = time.perf_counter() - started
        level = "INFO" if result.passed else "ERROR"
        logger.log(level, f"自检 {tag} ({result.name}, {suite_registry.describe(tag)}): "
                          f"{result.checked} 项, 失败 {len(result.failures)}, 耗时 {result.elapsed:.2f}s")
        results.append(result)
    return results
