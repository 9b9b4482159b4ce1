"""
常量定义模块
集中管理系统中使用的常量
"""

from typing import Tuple


# ==================== 通用常量 ====================

# 输出记录格式版本
SCHEMA_VERSION: int = 1

# 分类器支持的特征（p >= 5 属于已有结果，不在此实现）
CLASSIFIER_PRIMES: Tuple[int, ...] = (2, 3)

# 分类器要求的最小 n（更小的 n 由表格检查覆盖）
CLASSIFIER_MIN_N: int = 5

# p = 3 时分裂分拆 h >= 3 成立的最小 n
SPLIT_HEIGHT_MIN_N: int = 5

# 空分拆的文本写法
EMPTY_PARTITION_TEXT: str = "-"


# ==================== Specht 预言机常量 ====================

class OracleConstants:
    """Specht 预言机常量"""

    # 默认规模上限（内存是主要约束：tabloid 数量随 n 阶乘增长）
    DEFAULT_SIZE_CAP: int = 11

    # Polytabloid 稠密矩阵允许的最大单元数（SYT 数 × tabloid 数）
    DEFAULT_MAX_GRAM_CELLS: int = 20_000_000

    # 覆盖规模上限的环境变量
    SIZE_CAP_ENV: str = "PARTMOD_ORACLE_CAP"


# ==================== 扫描相关常量 ====================

class ScanConstants:
    """classify_all 扫描常量"""

    DEFAULT_MAX_N: int = 18
    DEFAULT_JOBS: int = 1


# ==================== 基本旋量张量积的界 ====================

class BasicSpinBounds:
    """基本旋量张量积的必要条件（正规结点数与高度上界）"""

    # 分裂 × 非分裂：非旋量因子正规结点数上界 (n 奇, n 偶)
    SPLIT_NONSPLIT_NORMAL: Tuple[int, int] = (2, 3)
    # 分裂 × 非分裂：h(ν) 上界 (n 奇, n 偶)
    SPLIT_NONSPLIT_HEIGHT: Tuple[int, int] = (6, 8)

    # 两者都分裂：非旋量因子正规结点数上界 (n 奇, n 偶)
    BOTH_SPLIT_NORMAL: Tuple[int, int] = (3, 4)


# ==================== 出处标签 ====================

class Citation:
    """分类结果与自检表使用的定理/引理标签"""

    MAIN = "Thm 1"
    DIM_ONE = "Sec 2.1"
    BENSON = "Lem 2.1"
    SPLIT_HEIGHT = "Lem 2.2"
    CRYSTAL_INVERSE = "Lem 2.7"
    CONORMAL_EXCESS = "Lem 2.8"
    MULLINEUX_BRANCHING = "Lem 2.9"
    JS_CLOSED_FORM = "Lem 2.10"
    JS_PARITY = "Lem 2.11"
    FIXED_FAMILY = "Lem 8.3"
    NO_FIXED_AT_NINE = "Lem 5.9"
    TWO_ROW_RESTRICTION = "Lem 8.1"
    SPLIT_JS_CHAR2 = "Lem 9.1"
    SPLIT_JS_ODD = "Lem 9.4"
    CASE_I = "Thm 1(i)"
    NATURAL_OR_SPIN_CHAR2 = "Thm 9.2"
    CASE_I_CHAR2 = "Thm 9.3"
    SPLIT_PAIRS = "Thm 10.1"
    BOTH_SPLIT_CHAR3 = "Thm 10.2"
    BOTH_WHOLE_CHAR2 = "Sec 12 Case 1"
    CASE_I_ODD = "Sec 12 Case 2"
    BOTH_WHOLE_CHAR3 = "Sec 12 Case 2"
    BASIC_SPIN = "Sec 11"
    HEIGHT_BOUND = "Lem 11.1"
