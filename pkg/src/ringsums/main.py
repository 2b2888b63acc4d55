"""
ringsums のコマンドラインインターフェース

使用例:
    ringsums powersum --ring "GF(2)" --k 3
    ringsums --json zeta --ring "UT(2,GF(2))" --k 3
    ringsums invariants --ring "Zmod(4)" --D 4 --what verify
    ringsums --jobs 4 verify all
"""

import argparse
import sys
from typing import Optional

from pydantic import ValidationError

from .core.config import get_settings, use_settings
from .core.exceptions import ClosedFormDispatchError, EnumerationCapError, RingSumsError, VerificationFailure
from .core.logging_utils import get_logger, setup_logging
from .rings.factory import build_ring
from .rings.spec import parse_ring_spec
from .schemas import (
    GeneratorListModel,
    GeneratorModel,
    InvariantSpaceModel,
    PolyModel,
    PowerSumComparisonModel,
    PowerSumResultModel,
    TwittReportModel,
    VerifyRunModel,
    ZetaResultModel,
)
from .services import closedform, invariance, oracle, suites
from .utils import CLIUtils

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringsums",
        description="有限環上の冪和多項式と平行移動不変多項式の計算",
    )
    parser.add_argument("--json", action="store_true", help="JSON で出力する")
    parser.add_argument("--cap", type=int, default=None, help="総当たりで列挙する位数の上限")
    parser.add_argument("--jobs", type=int, default=None, help="検証スイートの並列ワーカー数")
    parser.add_argument("--log-level", default=None, help="ログレベル（DEBUG, INFO, ...）")
    sub = parser.add_subparsers(dest="command", required=True)

    powersum = sub.add_parser("powersum", help="P_k(T) = Σ (T + r)^k を求める")
    powersum.add_argument("--ring", required=True, help='環仕様（例: "Mat(2,GF(2))"）')
    powersum.add_argument("--k", type=int, required=True)
    powersum.add_argument("--mode", choices=["closed", "brute", "both"], default="both")

    zeta = sub.add_parser("zeta", help="ζ_R(-k) = Σ r^k を求める")
    zeta.add_argument("--ring", required=True)
    zeta.add_argument("--k", type=int, required=True)

    invariants = sub.add_parser("invariants", help="平行移動不変多項式")
    invariants.add_argument("--ring", required=True)
    invariants.add_argument("--D", type=int, required=True, dest="degree", help="次数上限")
    invariants.add_argument("--what", choices=["generators", "bruteforce", "verify"], default="generators")
    invariants.add_argument("--method", choices=["auto", "exhaustive", "linear-solve"], default="auto")

    verify = sub.add_parser("verify", help="検証スイートを実行する")
    verify.add_argument("suite", choices=[*suites.SUITE_NAMES, "all"])
    verify.add_argument("--kmax", type=int, default=None)
    verify.add_argument("--D", type=int, default=None, dest="degree")
    return parser


# =============================================================================
# サブコマンド
# =============================================================================


def cmd_powersum(args: argparse.Namespace) -> int:
    spec = parse_ring_spec(args.ring)
    closed = brute = None
    if args.mode in ("closed", "both"):
        closed = closedform.power_sum_closed(spec, args.k)
    if args.mode in ("brute", "both"):
        brute = oracle.power_sum_bruteforce(build_ring(spec), args.k)
    equal = closed.poly == brute if closed is not None and brute is not None else None

    if args.json:
        model = PowerSumComparisonModel(
            ring=str(spec),
            k=args.k,
            mode=args.mode,
            closed=PowerSumResultModel.from_result(closed) if closed is not None else None,
            brute=PolyModel.from_poly(brute) if brute is not None else None,
            equal=equal,
        )
        print(model.model_dump_json(indent=2))
    else:
        rows = []
        if closed is not None:
            rows.append([f"閉じた式 ({closed.case})", closed.poly.format()])
        if brute is not None:
            rows.append(["総当たり", brute.format()])
        CLIUtils.display_table(["方法", f"P_{args.k}(T) over {spec}"], rows)
        if equal:
            CLIUtils.show_success("閉じた式と総当たりが一致しました")

    if equal is False:
        raise VerificationFailure(f"{spec} の P_{args.k} が一致しません")
    return 0


def cmd_zeta(args: argparse.Namespace) -> int:
    spec = parse_ring_spec(args.ring)
    brute = closed = None
    if spec.order <= get_settings().enumeration_cap:
        brute = oracle.zeta_bruteforce(build_ring(spec), args.k)
    try:
        closed = closedform.zeta_closed(spec, args.k)
    except ClosedFormDispatchError as e:
        if brute is None:
            raise EnumerationCapError(spec.order, get_settings().enumeration_cap) from e
        logger.debug("閉じた式がないので総当たりの値だけを使います", spec=str(spec))
    if brute is None:
        # 位数が上限を超え、閉じた式だけが頼り
        value, source = closed, "closed"
    elif closed is None:
        value, source = brute, "brute"
    else:
        value, source = brute, "both"

    if args.json:
        print(ZetaResultModel.from_element(str(spec), args.k, value, source).model_dump_json(indent=2))
    else:
        print(f"ζ_{spec}(-{args.k}) = {value}")

    if closed is not None and brute is not None and closed != brute:
        raise VerificationFailure(f"{spec} の ζ(-{args.k}) が一致しません: 閉じた式 {closed}, 総当たり {brute}")
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    spec = parse_ring_spec(args.ring)
    match args.what:
        case "generators":
            generators = invariance.twitt_generators(spec, args.degree)
            if args.json:
                model = GeneratorListModel(
                    ring=str(spec),
                    D=args.degree,
                    generators=[GeneratorModel.from_generator(g) for g in generators],
                )
                print(model.model_dump_json(indent=2))
            else:
                CLIUtils.display_table(
                    ["i", "n", "指数", "係数集合", "多項式"],
                    [
                        [g.i, g.n, g.exponent, _coefficient_set(g), g.poly.format()]
                        for g in generators
                    ],
                )
            return 0
        case "bruteforce":
            report = oracle.invariant_polys_bruteforce(build_ring(spec), args.degree, args.method)
            if args.json:
                print(InvariantSpaceModel.from_report(report).model_dump_json(indent=2))
            else:
                print(f"{spec}, D = {args.degree}: {report.count} 個 ({report.method})")
                CLIUtils.display_table(["多項式"], [[f.format()] for f in report.spanning_set()])
            return 0
        case "verify":
            method = "linear-solve" if args.method == "auto" else args.method
            report = invariance.verify_twitt_span(spec, args.degree, method)
            if args.json:
                print(TwittReportModel.from_report(report).model_dump_json(indent=2))
            else:
                CLIUtils.display_table(
                    ["環", "D", "不変多項式の個数", "生成される個数", "forward", "backward"],
                    [[spec, args.degree, report.invariant_count, report.span_count, report.forward, report.backward]],
                )
            if not report.passed:
                raise VerificationFailure(f"{spec} で生成元の加群と不変多項式の空間が一致しません")
            if not args.json:
                CLIUtils.show_success("生成元の加群と不変多項式の空間が一致しました")
            return 0
    raise RingSumsError(f"未知の指定です: {args.what}")


def _coefficient_set(generator: invariance.TwittGenerator) -> str:
    ring = generator.poly.ring
    if generator.kind == "full":
        return "R"
    return "{" + ", ".join(ring.format(c) for c in generator.coefficients) + "}"


def cmd_verify(args: argparse.Namespace) -> int:
    reports = suites.run_suites([args.suite], kmax=args.kmax, degree=args.degree)
    if args.json:
        print(VerifyRunModel.from_reports(reports).model_dump_json(indent=2))
    else:
        for report in reports:
            CLIUtils.display_suite(report)
    failed = sum(r.failed for r in reports)
    if failed:
        CLIUtils.show_failure(f"{failed} 件のケースが不一致でした")
        return VerificationFailure.exit_code
    return 0


COMMANDS = {
    "powersum": cmd_powersum,
    "zeta": cmd_zeta,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = use_settings(
            get_settings().with_overrides(enumeration_cap=args.cap, jobs=args.jobs, log_level=args.log_level)
        )
    except ValidationError as e:
        CLIUtils.show_failure(f"設定が不正です: {e.errors()[0]['msg']}")
        return 2
    setup_logging(settings.log_level, settings.log_json)

    try:
        return COMMANDS[args.command](args)
    except RingSumsError as e:
        CLIUtils.show_failure(e.message)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
