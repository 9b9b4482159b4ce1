"""
全表扫描

对 A_n 全部无序标签对（含对角）调用 classify。
并行时使用线程池的 map，结果顺序与标签对的枚举顺序一致。
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Tuple

from loguru import logger

from partmod.alternating import AltLabel, labels_of_size
from partmod.classifier.engine import TensorClassifier
from partmod.classifier.models import Classification, ScanSummary, Verdict
from partmod.utils.constants import ScanConstants
from partmod.utils.errors import OutOfRange


def label_pairs(labels: List[AltLabel]) -> List[Tuple[AltLabel, AltLabel]]:
    """无序标签对 (labels[i], labels[j])，i <= j"""
    return [(labels[i], labels[j]) for i in range(len(labels)) for j in range(i, len(labels))]


def classify_all(
    p: int,
    n: int,
    jobs: int = ScanConstants.DEFAULT_JOBS,
    max_n: int = ScanConstants.DEFAULT_MAX_N,
) -> List[Classification]:
    """
    分类 A_n 的全部标签对

    Args:
        p: 特征（2 或 3）
        n: 5 <= n <= max_n
        jobs: 线程数
        max_n: 扫描允许的最大 n

    Returns:
        按标签枚举顺序排列的分类结果
    """
    if n > max_n:
        raise OutOfRange(f"n={n} 超过扫描上限 {max_n}", "调大 scan.max_n 或 --max-n")
    classifier = TensorClassifier(p, n)
    pairs = label_pairs(labels_of_size(n, p))
    logger.info(f"开始扫描 p={p}, n={n}: {len(pairs)} 个标签对, jobs={jobs}")

    if jobs <= 1:
        rows = [classifier.classify(lhs, rhs) for lhs, rhs in pairs]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(lambda pair: classifier.classify(*pair), pairs))

    logger.info(f"扫描完成 p={p}, n={n}: {summarize(p, n, rows).counts}")
    return rows


def filter_rows(rows: Iterable[Classification], only: Optional[Verdict]) -> List[Classification]:
    if only is None:
        return list(rows)
    return [row for row in rows if row.verdict is only]


def summarize(p: int, n: int, rows: Iterable[Classification]) -> ScanSummary:
    summary = ScanSummary(p=p, n=n)
    for row in rows:
        summary.add(row)
    return summary
