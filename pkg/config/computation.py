"""
计算相关配置

- OracleSettings: Specht 预言机规模上限
- ScanSettings: classify_all 扫描参数
- SelftestSettings: 自检各套件的范围
"""

from dataclasses import dataclass, field

from loguru import logger

from partmod.utils.constants import CLASSIFIER_MIN_N, OracleConstants, ScanConstants

OUTPUT_FORMATS = ("pretty", "json", "csv")


@dataclass
class OracleSettings:
    """Specht 预言机设置"""

    size_cap: int = OracleConstants.DEFAULT_SIZE_CAP
    max_gram_cells: int = OracleConstants.DEFAULT_MAX_GRAM_CELLS

    @classmethod
    def from_dict(cls, data: dict) -> "OracleSettings":
        return cls(
            size_cap=int(data.get("size_cap", OracleConstants.DEFAULT_SIZE_CAP)),
            max_gram_cells=int(data.get("max_gram_cells", OracleConstants.DEFAULT_MAX_GRAM_CELLS)),
        )

    def validate(self) -> tuple[bool, list[str]]:
        errors = []
        if self.size_cap < 1:
            errors.append(f"oracle.size_cap 必须 >= 1: {self.size_cap}")
        if self.max_gram_cells < 1:
            errors.append(f"oracle.max_gram_cells 必须 >= 1: {self.max_gram_cells}")
        return len(errors) == 0, errors


@dataclass
class ScanSettings:
    """扫描设置"""

    max_n: int = ScanConstants.DEFAULT_MAX_N
    jobs: int = ScanConstants.DEFAULT_JOBS
    default_format: str = "json"

    @classmethod
    def from_dict(cls, data: dict) -> "ScanSettings":
        return cls(
            max_n=int(data.get("max_n", ScanConstants.DEFAULT_MAX_N)),
            jobs=int(data.get("jobs", ScanConstants.DEFAULT_JOBS)),
            default_format=data.get("default_format", "json"),
        )

    def validate(self) -> tuple[bool, list[str]]:
        errors = []
        if self.max_n < CLASSIFIER_MIN_N:
            errors.append(f"scan.max_n 必须 >= {CLASSIFIER_MIN_N}: {self.max_n}")
        if self.jobs < 1:
            errors.append(f"scan.jobs 必须 >= 1: {self.jobs}")
        if self.default_format not in OUTPUT_FORMATS:
            errors.append(f"scan.default_format 必须是 {', '.join(OUTPUT_FORMATS)} 之一: {self.default_format}")
        return len(errors) == 0, errors


@dataclass
class SelftestSettings:
    """自检套件范围（每个套件的最大 n）"""

    signature_max_n: int = 18
    crystal_max_n: int = 14
    mullineux_max_n: int = 14
    identity_max_n: int = 20
    compatibility_max_n: int = 12
    fixed_family_max_n: int = 18
    splitting_max_n: int = 30
    two_row_max_n: int = 10
    scan_max_n: int = 14
    suites: list = field(default_factory=list)  # 为空表示全部

    @classmethod
    def from_dict(cls, data: dict) -> "SelftestSettings":
        defaults = cls()
        return cls(
            signature_max_n=int(data.get("signature_max_n", defaults.signature_max_n)),
            crystal_max_n=int(data.get("crystal_max_n", defaults.crystal_max_n)),
            mullineux_max_n=int(data.get("mullineux_max_n", defaults.mullineux_max_n)),
            identity_max_n=int(data.get("identity_max_n", defaults.identity_max_n)),
            compatibility_max_n=int(data.get("compatibility_max_n", defaults.compatibility_max_n)),
            fixed_family_max_n=int(data.get("fixed_family_max_n", defaults.fixed_family_max_n)),
            splitting_max_n=int(data.get("splitting_max_n", defaults.splitting_max_n)),
            two_row_max_n=int(data.get("two_row_max_n", defaults.two_row_max_n)),
            scan_max_n=int(data.get("scan_max_n", defaults.scan_max_n)),
            suites=list(data.get("suites", []) or []),
        )

    def validate(self) -> tuple[bool, list[str]]:
        errors = [
            f"selftest.{name} 必须 >= 1: {value}"
            for name, value in vars(self).items()
            if name.endswith("_max_n") and value < 1
        ]
        return len(errors) == 0, errors


def validate_all(*sections) -> tuple[bool, list[str]]:
    """合并各配置段的验证结果"""
    errors = []
    for section in sections:
        _, section_errors = section.validate()
        errors.extend(section_errors)
    if errors:
        logger.warning(f"配置验证失败: {'; '.join(errors)}")
    return len(errors) == 0, errors
