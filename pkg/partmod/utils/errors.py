"""
错误类型定义

所有领域异常都继承自 PartmodError，携带可选的修复建议。
输入不合法的异常同时继承 ValueError，便于调用方统一捕获参数错误。
"""

from typing import Optional


class PartmodError(Exception):
    """Base exception for partmod errors."""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        self.message = message
        self.suggestion = suggestion
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        if self.suggestion:
            return f"{self.message}. Suggestion: {self.suggestion}"
        return self.message


class NotAPartition(PartmodError, ValueError):
    """序列不是分拆（非递减或含非正数）"""

    def __init__(self, message: str, index: Optional[int] = None, suggestion: Optional[str] = None):
        self.index = index
        super().__init__(message, suggestion)


class LabelSyntaxError(PartmodError, ValueError):
    """分拆或标签的文本格式错误"""


class SizeMismatch(PartmodError, ValueError):
    """两个分拆的大小不一致"""


class IrregularInput(PartmodError, ValueError):
    """输入分拆不是 p-正则的"""


class IrregularResult(PartmodError):
    """计算结果不是 p-正则分拆"""


class NotEnoughNormalNodes(PartmodError):
    """正规结点数量不足，无法执行 ẽ_i^r"""


class NotEnoughConormalNodes(PartmodError):
    """余正规结点数量不足，无法执行 f̃_i^r"""


class NotNormal(PartmodError, ValueError):
    """给定结点不是 i-正规结点"""


class OutsideLemmaScope(PartmodError):
    """输入超出两行分支公式的适用范围（t = 0）"""


class EmptyPartition(PartmodError, ValueError):
    """空分拆没有 p-边缘"""


class NoSuchPartition(PartmodError):
    """没有分拆对应给定的 Mullineux 符号"""


class PreconditionViolated(PartmodError):
    """操作的前置条件不成立"""


class UnsupportedCharacteristic(PartmodError, ValueError):
    """分类器只支持特征 2 和 3"""


class VariantInconsistent(PartmodError, ValueError):
    """标签的 +/- 变体与分裂性不一致"""


class OutOfRange(PartmodError, ValueError):
    """参数超出允许范围"""


class TooLarge(PartmodError):
    """规模超过 Specht 预言机的上限"""


class OddDimension(PartmodError):
    """分裂标签的 Gram 秩为奇数（内部缺陷）"""


def format_error(error: Exception) -> str:
    """Format an exception into a one-line diagnostic.

    Args:
        error: The exception to format

    Returns:
        str: Formatted error message
    """
    if isinstance(error, PartmodError):
        return f"Error: {type(error).__name__}: {error}"

    error_messages = {
        ValueError: "Invalid input value",
        TypeError: "Invalid input type",
        KeyError: "Missing required field",
    }

    error_type = type(error)
    if error_type in error_messages:
        return f"Error: {error_messages[error_type]} - {str(error)}"

    return f"Error: {str(error)}"


# 常用错误消息模板
ERROR_TEMPLATES = {
    "irregular_input": {
        "message": "Partition {partition} is not {p}-regular",
        "suggestion": "Use a partition in which no part repeats {p} or more times",
    },
    "size_mismatch": {
        "message": "Sizes differ: |{lhs}| = {lhs_size}, |{rhs}| = {rhs_size}",
        "suggestion": "Both partitions must have the same size",
    },
    "unsupported_p": {
        "message": "Characteristic {p} is not supported by the classifier",
        "suggestion": "Use p = 2 or p = 3",
    },
    "oracle_cap": {
        "message": "n = {n} exceeds the oracle size cap {cap}",
        "suggestion": "Raise the cap with PARTMOD_ORACLE_CAP or oracle.size_cap in settings.yaml",
    },
    "oracle_cap_env": {
        "message": "{env} = {value!r} is not a positive integer",
        "suggestion": "Set {env} to a positive integer such as 11, or unset it",
    },
    "variant_on_nonsplit": {
        "message": "Label {label} carries a +/- suffix but {partition} does not split for p = {p}",
        "suggestion": "Drop the suffix for non-split partitions",
    },
    "variant_missing": {
        "message": "Partition {partition} splits for p = {p}; label {label} needs a + or - suffix",
        "suggestion": "Write the label as '{label}+' or '{label}-'",
    },
}


def get_error_message(error_type: str, **kwargs) -> tuple[str, Optional[str]]:
    """Get (message, suggestion) from a template.

    Args:
        error_type: Key of ERROR_TEMPLATES
        **kwargs: Values to substitute in the template

    Returns:
        (message, suggestion)
    """
    if error_type not in ERROR_TEMPLATES:
        return error_type, None

    template = ERROR_TEMPLATES[error_type]
    message = template["message"].format(**kwargs)
    suggestion = template.get("suggestion", "").format(**kwargs) or None
    return message, suggestion


class InternalDefect(PartmodError):
    """两个独立实现给出不同结果（实现缺陷）"""
