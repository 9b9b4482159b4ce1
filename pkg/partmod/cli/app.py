"""
partmod 命令行

子命令：classify | scan | nodes | mullineux | oracle | selftest
退出码：0 成功，1 用法错误，2 计算错误。数据写 stdout，诊断写 stderr。
"""

import argparse
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

import config
from config.computation import OUTPUT_FORMATS
from config.logger import setup
from partmod import oracle
from partmod.alternating import parse_label
from partmod.branching import is_js, normal_count, require_p_regular, restriction_blocks, signatures
from partmod.classifier import classify, classify_all, filter_rows, summarize
from partmod.cli.formatters import render
from partmod.cli.models import CharacteristicRequest, ClassifyRequest, OutputRecord, ScanRequest
from partmod.cli.selftest import run_suites, suite_registry
from partmod.mullineux import mullineux, mullineux_symbol
from partmod.partition import enumerate_p_regular, parse_partition
from partmod.utils.constants import CLASSIFIER_PRIMES
from partmod.utils.errors import PartmodError, format_error

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2

FORMATS = list(OUTPUT_FORMATS)
VERDICT_CHOICES = ["trivial", "notirreducible", "irreducible", "open"]


class UsageError(Exception):
    """命令行用法错误（退出码 1）"""


class ArgumentParser(argparse.ArgumentParser):
    """用法错误抛出 UsageError，而不是直接退出"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@contextmanager
def usage_errors():
    """把参数解析阶段的异常转换为用法错误"""
    try:
        yield
    except (PartmodError, ValueError, ValidationError) as e:
        raise UsageError(format_error(e) if isinstance(e, PartmodError) else str(e)) from e


def _emit(args, command: str, rows: List[dict], started: float) -> None:
    sys.stdout.write(render(args.format, command, args.argv, rows))
    sys.stdout.flush()
    record = OutputRecord(command=command, argv=args.argv, elapsed=time.perf_counter() - started)
    logger.info(f"{record.command}: {len(rows)} 条记录, 耗时 {record.elapsed:.3f}s")


# ==================== 子命令 ====================

def cmd_classify(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = ClassifyRequest(p=args.p, n=args.n)
        lhs, rhs = parse_label(args.lhs, request.p), parse_label(args.rhs, request.p)
    result = classify(request.p, request.n, lhs, rhs)
    _emit(args, "classify", [result.to_dict()], started)
    return EXIT_OK


def cmd_scan(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = ScanRequest(
            p=args.p, n=args.n, only=args.only,
            jobs=args.jobs or args.settings.scan.jobs,
            max_n=args.max_n or args.settings.scan.max_n,
        )
    rows = classify_all(request.p, request.n, jobs=request.jobs, max_n=request.max_n)
    summary = summarize(request.p, request.n, rows)
    logger.info(f"扫描汇总: {summary.to_dict()}")
    _emit(args, "scan", [row.to_dict() for row in filter_rows(rows, request.only)], started)
    return EXIT_OK


def cmd_nodes(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = CharacteristicRequest(p=args.p)
        la = require_p_regular(parse_partition(args.partition), request.p)
    if args.blocks:
        rows = [block.to_dict() for block in restriction_blocks(la, request.p)]
    else:
        rows = [report.to_dict() for report in signatures(la, request.p)]
    logger.info(f"{la} (p={request.p}): 正规结点 {normal_count(la, request.p)} 个, JS={is_js(la, request.p)}")
    _emit(args, "nodes", rows, started)
    return EXIT_OK


def cmd_mullineux(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = CharacteristicRequest(p=args.p)
        la = require_p_regular(parse_partition(args.partition), request.p)
    image = mullineux(la, request.p)
    row = {
        "input": str(la),
        "symbol": mullineux_symbol(la, request.p).to_dict(),
        "image": str(image),
        "fixed": image == la,
    }
    _emit(args, "mullineux", [row], started)
    return EXIT_OK


def cmd_oracle_dim(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = CharacteristicRequest(p=args.p)
        if args.all:
            if args.n is None:
                raise ValueError("--all 需要 --n")
            partitions = list(enumerate_p_regular(args.n, request.p))
        elif args.partition:
            partitions = [parse_partition(args.partition)]
        else:
            raise ValueError("需要给出分拆或 --all --n N")

    jobs = args.jobs or args.settings.scan.jobs
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            certificates = list(executor.map(lambda la: oracle.gram_rank(la, request.p), partitions))
    else:
        certificates = [oracle.gram_rank(la, request.p) for la in partitions]

    if args.all:
        total = sum(c.rank ** 2 for c in certificates)
        logger.info(f"Σ dim² = {total} (n={args.n}, p={request.p})")
    _emit(args, "oracle dim", [c.to_dict() for c in certificates], started)
    return EXIT_OK


def _emit_checks(args, command: str, checks, started: float) -> int:
    _emit(args, command, [check.to_dict() for check in checks], started)
    failed = [check for check in checks if not check.holds]
    if failed:
        logger.error(f"{command}: {len(failed)}/{len(checks)} 项维数恒等式不成立")
        return EXIT_COMPUTATION
    return EXIT_OK


def cmd_oracle_verify_branching(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = CharacteristicRequest(p=args.p, max_n=args.max_n)
    return _emit_checks(args, "oracle verify-branching", oracle.two_row_sweep(request.p, request.max_n), started)


def cmd_oracle_verify_classifier(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        request = CharacteristicRequest(p=args.p, max_n=args.max_n)
        if request.p not in CLASSIFIER_PRIMES:
            raise ValueError(f"分类器只支持 p ∈ {CLASSIFIER_PRIMES}，收到 {request.p}")
    return _emit_checks(args, "oracle verify-classifier", oracle.case_i_sweep(request.p, request.max_n), started)


def cmd_selftest(args) -> int:
    started = time.perf_counter()
    with usage_errors():
        for tag in args.suite or []:
            if not suite_registry.is_registered(tag):
                raise ValueError(f"未知的自检套件: {tag}（可用: {', '.join(suite_registry.list_names())}）")
    results = run_suites(args.settings.selftest, args.suite, args.max_n)
    _emit(args, "selftest", [result.to_dict() for result in results], started)
    return EXIT_OK if all(result.passed for result in results) else EXIT_COMPUTATION


# ==================== 参数解析 ====================

def _add_format(parser: argparse.ArgumentParser, default: Optional[str] = "pretty") -> None:
    parser.add_argument('--format', choices=FORMATS, default=default, help='输出格式')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='partmod', description='对称群与交错群模表示的分拆组合')
    parser.add_argument('--config', default=config.DEFAULT_CONFIG_PATH, help='配置文件路径')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--quiet', action='store_true', help='只输出警告和错误')
    verbosity.add_argument('--verbose', action='store_true', help='输出调试日志')
    subparsers = parser.add_subparsers(dest='command', parser_class=ArgumentParser)

    # classify
    classify_parser = subparsers.add_parser('classify', help='判定 V ⊗ W 是否不可约')
    classify_parser.add_argument('--p', type=int, required=True, help='特征（2 或 3）')
    classify_parser.add_argument('--n', type=int, required=True, help='n >= 5')
    classify_parser.add_argument('--lhs', required=True, help='标签，例如 5,3,1+')
    classify_parser.add_argument('--rhs', required=True, help='标签，例如 8,1')
    _add_format(classify_parser)
    classify_parser.add_argument('--json', dest='format', action='store_const', const='json', help='同 --format json')
    classify_parser.set_defaults(func=cmd_classify)

    # scan
    scan_parser = subparsers.add_parser('scan', help='分类 A_n 的全部标签对')
    scan_parser.add_argument('--p', type=int, required=True, help='特征（2 或 3）')
    scan_parser.add_argument('--n', type=int, required=True, help='n >= 5')
    scan_parser.add_argument('--only', choices=VERDICT_CHOICES, help='只输出该判定结果')
    scan_parser.add_argument('--jobs', type=int, help='线程数')
    scan_parser.add_argument('--max-n', type=int, help='扫描允许的最大 n')
    _add_format(scan_parser, default=None)
    scan_parser.set_defaults(func=cmd_scan)

    # nodes
    nodes_parser = subparsers.add_parser('nodes', help='各剩余类的约化签名')
    nodes_parser.add_argument('--p', type=int, required=True, help='特征 p >= 2')
    nodes_parser.add_argument('partition', help='分拆，例如 5,3,1')
    nodes_parser.add_argument('--blocks', action='store_true',
                              help='改为输出每个 ε_i > 0 的 e_i D^λ 块、头部与头部重数')
    _add_format(nodes_parser)
    nodes_parser.set_defaults(func=cmd_nodes)

    # mullineux
    mullineux_parser = subparsers.add_parser('mullineux', help='Mullineux 像与符号')
    mullineux_parser.add_argument('--p', type=int, required=True, help='特征 p >= 2')
    mullineux_parser.add_argument('partition', help='分拆，例如 7,3,2')
    _add_format(mullineux_parser)
    mullineux_parser.set_defaults(func=cmd_mullineux)

    # oracle
    oracle_parser = subparsers.add_parser('oracle', help='Specht 模 Gram 秩验证')
    oracle_sub = oracle_parser.add_subparsers(dest='oracle_command', parser_class=ArgumentParser)

    dim_parser = oracle_sub.add_parser('dim', help='dim D^λ')
    dim_parser.add_argument('--p', type=int, required=True, help='特征 p >= 2')
    dim_parser.add_argument('partition', nargs='?', help='分拆')
    dim_parser.add_argument('--all', action='store_true', help='n 的全部 p-正则分拆')
    dim_parser.add_argument('--n', type=int, help='与 --all 一起使用')
    dim_parser.add_argument('--jobs', type=int, help='线程数')
    _add_format(dim_parser)
    dim_parser.set_defaults(func=cmd_oracle_dim)

    branching_parser = oracle_sub.add_parser('verify-branching', help='两行限制公式的维数验证')
    branching_parser.add_argument('--p', type=int, required=True, help='特征 p >= 2')
    branching_parser.add_argument('--max-n', type=int, required=True, help='最大 n')
    _add_format(branching_parser)
    branching_parser.set_defaults(func=cmd_oracle_verify_branching)

    classifier_parser = oracle_sub.add_parser('verify-classifier', help='(i) 型乘积的维数验证')
    classifier_parser.add_argument('--p', type=int, required=True, help='特征（2 或 3）')
    classifier_parser.add_argument('--max-n', type=int, required=True, help='最大 n')
    _add_format(classifier_parser)
    classifier_parser.set_defaults(func=cmd_oracle_verify_classifier)

    # selftest
    selftest_parser = subparsers.add_parser('selftest', help='运行全部不变量自检')
    selftest_parser.add_argument('--suite', action='append', help='只运行该标签的套件（可重复）')
    selftest_parser.add_argument('--max-n', type=int, help='所有套件共同的 n 上限')
    _add_format(selftest_parser)
    selftest_parser.set_defaults(func=cmd_selftest)

    return parser


def load_settings(path: str) -> config.Config:
    """配置文件不存在时使用默认配置"""
    if Path(path).exists():
        settings = config.Config.load(path)
    else:
        settings = config.Config()
    settings.assert_valid()
    return settings


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行入口

    Returns:
        退出码：0 成功，1 用法错误，2 计算错误
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if args.command is None or not hasattr(args, 'func'):
            raise UsageError(parser.format_usage().strip())
        settings = load_settings(args.config)
    except (UsageError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    level = "WARNING" if args.quiet else "DEBUG" if args.verbose else None
    setup(settings.logger.with_level(level))
    oracle.configure(settings.oracle)

    args.settings = settings
    args.argv = argv
    if getattr(args, 'format', None) is None:
        args.format = settings.scan.default_format

    try:
        return args.func(args)
    except UsageError as e:
        logger.error(f"用法错误: {e}")
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except PartmodError as e:
        logger.error(f"计算错误: {format_error(e)}")
        print(format_error(e), file=sys.stderr)
        return EXIT_COMPUTATION
    except KeyboardInterrupt:
        logger.info("用户中断程序 (Ctrl+C)")
        return EXIT_COMPUTATION
