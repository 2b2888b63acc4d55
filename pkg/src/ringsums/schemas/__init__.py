from .reports import (
    CaseRecordModel,
    GeneratorListModel,
    GeneratorModel,
    InvariantSpaceModel,
    PolyModel,
    PowerSumComparisonModel,
    PowerSumResultModel,
    SuiteReportModel,
    TwittReportModel,
    VerifyRunModel,
    ZetaResultModel,
)

__all__ = [
    "CaseRecordModel",
    "GeneratorListModel",
    "GeneratorModel",
    "InvariantSpaceModel",
    "PolyModel",
    "PowerSumComparisonModel",
    "PowerSumResultModel",
    "SuiteReportModel",
    "TwittReportModel",
    "VerifyRunModel",
    "ZetaResultModel",
]
