"""
JSON 出力のモデル

CLI の --json はすべてここのモデルの model_dump_json を通す。
"""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from ..poly.polynomial import Poly
from ..rings.base import RingElement
from ..services.closedform import PowerSumResult
from ..services.invariance import TwittGenerator, TwittReport
from ..services.oracle import InvariantSpaceReport
from ..services.suites import CaseRecord, SuiteReport


class PolyModel(BaseModel):
    """係数は昇冪順、零多項式は空リスト"""

    ring: str
    coeffs: list[Any] = Field(default_factory=list)

    @classmethod
    def from_poly(cls, poly: Poly) -> "PolyModel":
        return cls(**poly.render())


class PowerSumResultModel(BaseModel):
    ring: str
    k: int = Field(ge=0)
    case: str
    poly: PolyModel
    symbolic: Optional[list[tuple[int, int]]] = None
    formatted: str

    @classmethod
    def from_result(cls, result: PowerSumResult) -> "PowerSumResultModel":
        return cls(
            ring=str(result.spec),
            k=result.k,
            case=result.case,
            poly=PolyModel.from_poly(result.poly),
            symbolic=result.symbolic_terms(),
            formatted=result.poly.format(),
        )


class PowerSumComparisonModel(BaseModel):
    ring: str
    k: int = Field(ge=0)
    mode: Literal["closed", "brute", "both"]
    closed: Optional[PowerSumResultModel] = None
    brute: Optional[PolyModel] = None
    equal: Optional[bool] = None


class ZetaResultModel(BaseModel):
    ring: str
    k: int = Field(ge=0)
    value: Any
    formatted: str
    source: Literal["brute", "closed", "both"]

    @classmethod
    def from_element(cls, spec: str, k: int, value: RingElement, source: str) -> "ZetaResultModel":
        return cls(ring=spec, k=k, value=value.render(), formatted=str(value), source=source)


class InvariantSpaceModel(BaseModel):
    ring: str
    D: int = Field(ge=0)
    method: Literal["exhaustive", "linear-solve"]
    count: int = Field(ge=1)
    spanning_set: list[PolyModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: InvariantSpaceReport) -> "InvariantSpaceModel":
        return cls(
            ring=str(report.spec),
            D=report.degree,
            method=report.method,
            count=report.count,
            spanning_set=[PolyModel.from_poly(f) for f in report.spanning_set()],
        )


class GeneratorModel(BaseModel):
    i: int = Field(ge=0)
    n: int = Field(ge=0)
    exponent: int = Field(ge=0)
    kind: Literal["full", "annihilator"]
    coefficients: list[Any]
    poly: PolyModel

    @classmethod
    def from_generator(cls, generator: TwittGenerator) -> "GeneratorModel":
        ring = generator.poly.ring
        return cls(
            i=generator.i,
            n=generator.n,
            exponent=generator.exponent,
            kind=generator.kind,
            coefficients=[ring.render(c) for c in generator.coefficients],
            poly=PolyModel.from_poly(generator.poly),
        )


class GeneratorListModel(BaseModel):
    ring: str
    D: int = Field(ge=0)
    generators: list[GeneratorModel] = Field(default_factory=list)


class TwittReportModel(BaseModel):
    ring: str
    D: int = Field(ge=0)
    method: str
    invariant_count: int
    span_count: int
    forward: bool
    backward: bool
    generators: list[GeneratorModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: TwittReport) -> "TwittReportModel":
        return cls(
            ring=str(report.spec),
            D=report.degree,
            method=report.method,
            invariant_count=report.invariant_count,
            span_count=report.span_count,
            forward=report.forward,
            backward=report.backward,
            generators=[GeneratorModel.from_generator(g) for g in report.generators],
        )


class CaseRecordModel(BaseModel):
    suite: str
    key: list[Any]
    ring: str
    params: dict[str, Any] = Field(default_factory=dict)
    expected: str
    provenance: str
    actual: str
    passed: bool

    @classmethod
    def from_record(cls, record: CaseRecord) -> "CaseRecordModel":
        return cls(
            suite=record.suite,
            key=list(record.key),
            ring=record.ring,
            params=record.params,
            expected=record.expected,
            provenance=record.provenance,
            actual=record.actual,
            passed=record.passed,
        )


class SuiteReportModel(BaseModel):
    suite: str
    passed: int = Field(ge=0)
    failed: int = Field(ge=0)
    duration: float = Field(ge=0)
    cases: list[CaseRecordModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: SuiteReport) -> "SuiteReportModel":
        return cls(
            suite=report.suite,
            passed=report.passed,
            failed=report.failed,
            duration=report.duration,
            cases=[CaseRecordModel.from_record(c) for c in report.cases],
        )


class VerifyRunModel(BaseModel):
    """verify サブコマンド全体の出力"""

    suites: list[SuiteReportModel]
    passed: int = Field(ge=0)
    failed: int = Field(ge=0)

    @classmethod
    def from_reports(cls, reports: list[SuiteReport]) -> "VerifyRunModel":
        models = [SuiteReportModel.from_report(r) for r in reports]
        return cls(
            suites=models,
            passed=sum(m.passed for m in models),
            failed=sum(m.failed for m in models),
        )
