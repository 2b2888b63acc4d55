"""
検証スイート

各スイートは「ケースを作る関数」の一覧で、ケースは環ごとにまとめた作業単位。
jobs > 1 ならプロセスプールで並列に実行し、結果はケースのキー順に並べる。
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..core.config import Settings, get_settings, use_settings
from ..core.exceptions import RingSumsError
from ..core.logging_utils import PerformanceLogger, get_logger, setup_logging
from ..poly.polynomial import Poly
from ..rings.base import RingElement
from ..rings.factory import build_ring, realize_ring
from ..rings.spec import GF, Zmod, parse_ring_spec
from . import closedform, invariance, linalg, oracle

logger = get_logger(__name__)

SUITE_NAMES = ("t1", "tmain", "twitt", "bcl", "erratum", "fgor", "negk", "waring", "vanishing")


@dataclass
class CaseRecord:
    """一つの比較の結果"""

    suite: str
    key: tuple
    ring: str
    params: dict[str, Any]
    expected: str
    provenance: str
    actual: str
    passed: bool


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseRecord] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _record(
    suite: str,
    key: tuple,
    ring: str,
    params: dict[str, Any],
    expected: Any,
    actual: Any,
    provenance: str,
) -> CaseRecord:
    return CaseRecord(suite, key, ring, params, str(expected), provenance, str(actual), expected == actual)


# =============================================================================
# t1: GF(q) の冪和とゼータ値
# =============================================================================


def case_field(q: int, kmax: int) -> list[CaseRecord]:
    ring = build_ring(GF(q))
    brute = oracle.power_sums_bruteforce(ring, kmax)
    zetas = oracle.all_zeta_values(ring, kmax)
    minus_one = ring.neg(ring.one)
    records = []
    for k in range(kmax + 1):
        closed = closedform.power_sum_fq(q, k).poly
        params = {"q": q, "k": k}
        records.append(
            _record("t1", (q, k, 0), f"GF({q})", params, brute[k], closed, "closed form over F_q = brute force")
        )
        intermediate = closedform.power_sum_fq_intermediate(q, k)
        records.append(
            _record("t1", (q, k, 1), f"GF({q})", params, closed, intermediate, "binomial form = factorial form")
        )
        law = minus_one if k > 0 and k % (q - 1) == 0 else ring.zero
        records.append(
            _record(
                "t1", (q, k, 2), f"GF({q})", params,
                ring.format(law), ring.format(zetas[k]), "zeta(-k) = -1 iff (q-1) | k > 0",
            )
        )
    return records


# =============================================================================
# tmain: 巡回群・標数 2 の例外・直積
# =============================================================================


def case_closed_vs_brute(suite: str, spec_text: str, kmax: int, provenance: str) -> list[CaseRecord]:
    spec = parse_ring_spec(spec_text)
    ring = build_ring(spec)
    brute = oracle.power_sums_bruteforce(ring, kmax)
    records = []
    for k in range(kmax + 1):
        closed = closedform.power_sum_closed(spec, k)
        records.append(
            _record(suite, (spec_text, k, 0), spec_text, {"k": k, "case": closed.case},
                    brute[k], closed.poly, provenance)
        )
    return records


def case_even_vanishing(spec_text: str, kmax: int) -> list[CaseRecord]:
    spec = parse_ring_spec(spec_text)
    ring = build_ring(spec)
    brute = oracle.power_sums_bruteforce(ring, kmax)
    zero = Poly.zero(ring)
    return [
        _record("tmain", (spec_text, k, 1), spec_text, {"k": k}, zero, brute[k], "even k gives 0")
        for k in range(0, kmax + 1, 2)
    ]


def case_cyclic_lift(p: int, m: int, kmax: int) -> list[CaseRecord]:
    """持ち上げの取り方に依らないこと、と一段上への漸化式"""
    records = []
    spec_text = f"Zmod({p ** m})"
    lower_sums = oracle.power_sums_bruteforce(build_ring(Zmod(p ** (m - 1))), kmax)
    upper_sums = oracle.power_sums_bruteforce(build_ring(Zmod(p**m)), kmax)
    for k in range(kmax + 1):
        a = closedform.power_sum_zmod_prime_power(p, m, k, lift_offset=0)
        b = closedform.power_sum_zmod_prime_power(p, m, k, lift_offset=1)
        records.append(
            _record("tmain", (spec_text, k, 2), spec_text, {"k": k}, a, b, "independent of the lift")
        )
        predicted = closedform.cyclic_next_level(
            p, m - 1, k, lower_sums[k], lower_sums[k - 1] if k > 0 else None
        )
        records.append(
            _record("tmain", (spec_text, k, 3), spec_text, {"k": k},
                    upper_sums[k], predicted, "one level up from Z/p^(m-1)")
        )
    return records


# =============================================================================
# twitt: 不変多項式の生成元
# =============================================================================


def case_twitt_span(spec_text: str, degree: int) -> list[CaseRecord]:
    report = invariance.verify_twitt_span(spec_text, degree)
    params = {"D": degree, "method": report.method}
    return [
        _record("twitt", (spec_text, 0), spec_text, params, True, report.forward, "generators are invariant"),
        _record("twitt", (spec_text, 1), spec_text, params, True, report.backward, "invariants lie in the span"),
        _record("twitt", (spec_text, 2), spec_text, params,
                report.invariant_count, report.span_count, "counts agree"),
    ]


def case_class_independence(first: str, second: str, degree: int) -> list[CaseRecord]:
    a = [g.family() for g in invariance.twitt_generators(first, degree)]
    b = [g.family() for g in invariance.twitt_generators(second, degree)]
    return [
        _record("twitt", (f"{first}~{second}", 0), f"{first} / {second}", {"D": degree},
                a, b, "generator family does not depend on the nilpotence class")
    ]


def _lift_inputs(spec_text: str) -> list[Poly]:
    spec = parse_ring_spec(spec_text)
    residue = realize_ring(invariance.residue_spec(spec))
    q = residue.order
    base = Poly.monomial(residue, q) - Poly.variable(residue)
    inputs = [base, base * base + Poly.constant(residue, residue.one)]
    if residue.order > 2:
        y = residue.element_at(residue.order - 1)
        inputs.append(base.scale(y))
    return inputs


def case_lift(spec_text: str) -> list[CaseRecord]:
    spec = parse_ring_spec(spec_text)
    ring = build_ring(spec)
    shape = invariance.witt_shape(spec)
    records = []
    for index, a1 in enumerate(_lift_inputs(spec_text)):
        for i in range(shape.m):
            lifted = invariance.lift_invariant(spec, a1, i)
            params = {"a1": str(a1), "i": i}
            records.append(
                _record("twitt", (spec_text, 10 + index, i, 0), spec_text, params,
                        True, invariance.is_translation_invariant(ring, lifted), "lift is invariant")
            )
            degree = max(lifted.degree, 0)
            layout = oracle.CoordinateLayout(ring, degree)
            span = [
                layout.embed(f)
                for g in invariance.twitt_generators(spec, degree)
                for f in g.elements()
            ]
            member = linalg.in_span(layout.embed(lifted), span, layout.modulus)
            records.append(
                _record("twitt", (spec_text, 10 + index, i, 1), spec_text, params,
                        True, member, "lift lies in the generated module")
            )
    return records


# =============================================================================
# bcl / erratum / fgor / vanishing
# =============================================================================


def case_matrix_zeta(spec_text: str, kmin: int, kmax: int) -> list[CaseRecord]:
    spec = parse_ring_spec(spec_text)
    ring = build_ring(spec)
    zetas = oracle.all_zeta_values(ring, kmax)
    n, q = spec.d, spec.inner.order
    records = []
    for k in range(kmin, kmax + 1):
        expected = closedform.bcl_power_sum(n, q, k)
        records.append(
            _record("bcl", (spec_text, k), spec_text, {"k": k},
                    expected, RingElement(ring, zetas[k]), "Id iff n = q = 2 and 1 < k = 0, 1, 5 mod 6")
        )
    return records


def case_erratum(kmax: int) -> list[CaseRecord]:
    spec_text = "UT(2,GF(2))"
    ring = build_ring(spec_text)
    zetas = oracle.all_zeta_values(ring, kmax)
    x = ring.unit(0, 1)
    records = []
    for k in range(1, kmax + 1):
        expected = x if k % 2 == 1 and k >= 3 else ring.zero
        records.append(
            _record("erratum", (k,), spec_text, {"k": k},
                    ring.format(expected), ring.format(zetas[k]), "odd k >= 3 gives x, otherwise 0")
        )
    return records


def case_fgor(n: int, kmax: int) -> list[CaseRecord]:
    spec_text = f"Mat(2,Zmod({n}))"
    ring = build_ring(spec_text)
    inner = ring.inner
    zetas = oracle.all_zeta_values(ring, kmax)
    records = []
    e = n // 2 if n % 4 == 2 else 0
    if e:
        records.append(
            _record("fgor", (n, 0), spec_text, {"e": e}, (0, e),
                    (inner.mul_int(e, 2), inner.mul(e, e)), "2e = 0 and e^2 = e")
        )
    for k in range(1, kmax + 1):
        active = e and k > 1 and k % 6 in (0, 1, 5)
        expected = ring.scalar(e) if active else ring.zero
        records.append(
            _record("fgor", (n, k), spec_text, {"k": k},
                    ring.format(expected), ring.format(zetas[k]), "e·Id for 1 < k = 0, 1, 5 mod 6, else 0")
        )
    return records


def case_vanishing(spec_text: str, kmax: int) -> list[CaseRecord]:
    spec = parse_ring_spec(spec_text)
    ring = build_ring(spec)
    brute = oracle.power_sums_bruteforce(ring, kmax)
    zero = Poly.zero(ring)
    records = []
    for k in range(1, kmax + 1):
        closed = closedform.power_sum_closed(spec, k)
        records.append(
            _record("vanishing", (spec_text, k, 0), spec_text, {"k": k}, zero, brute[k],
                    "power sums vanish")
        )
        records.append(
            _record("vanishing", (spec_text, k, 1), spec_text, {"k": k}, "vanishing", closed.case,
                    "dispatched to the vanishing case")
        )
    return records


# =============================================================================
# negk / waring
# =============================================================================


def case_negative(q: int, kmax: int, s: int = 2) -> list[CaseRecord]:
    big = build_ring(GF(q**s))
    records = []
    points = [
        RingElement(big, t) for t in big.elements() if big.pow(t, q) != t
    ]
    for k in range(1, kmax + 1):
        laurent = closedform.power_sum_fq_negative(q, k)
        records.append(
            _record("negk", (q, k, -1, 0), f"GF({q})", {"k": k},
                    laurent, closedform.power_sum_fq_negative_intermediate(q, k), "binomial form = factorial form")
        )
        for t in points:
            params = {"k": k, "t": str(t)}
            index = big.index_of(t.value)
            records.append(
                _record("negk", (q, k, index, 1), f"GF({q})", params,
                        oracle.negative_power_sum_eval(q, k, t), laurent.evaluate(t), "evaluation in GF(q^s)")
            )
    for k in range(1, q + 1):
        for t in points:
            index = big.index_of(t.value)
            actual = oracle.negative_sigma_eval(q, k, t)
            expected = closedform.sigma_closed_form(q, -k).evaluate(t)
            records.append(
                _record("negk", (q, -k, index, 2), f"GF({q})", {"k": -k, "t": str(t)},
                        expected, actual, "Sigma_{-k} table")
            )
    return records


def case_waring_numeric(n: int, k: int, samples: int = 100, seed: int = 0) -> list[CaseRecord]:
    rng = random.Random(seed * 1000 + n * 100 + k)
    terms = closedform.waring_power_sum(k, n)
    mismatches = 0
    for _ in range(samples):
        xs = [rng.randint(-10, 10) for _ in range(n)]
        if closedform.evaluate_waring(terms, xs) != sum(x**k for x in xs):
            mismatches += 1
    return [
        _record("waring", ("numeric", n, k), "Z", {"n": n, "k": k, "samples": samples},
                0, mismatches, "Waring terms reproduce sums of powers")
    ]


def case_sigma_table(q: int) -> list[CaseRecord]:
    records = []
    for k in range(1, q + 1):
        brute = oracle.elementary_symmetric_bruteforce(q, k)
        closed = closedform.sigma_closed_form(q, k).to_poly()
        records.append(
            _record("waring", ("sigma", q, k), f"GF({q})", {"k": k}, closed, brute, "Sigma_k table")
        )
    return records


def case_waring_instantiation(q: int, kmax: int) -> list[CaseRecord]:
    return [
        _record("waring", ("instantiation", q, k), f"GF({q})", {"k": k},
                closedform.power_sum_fq(q, k).poly, closedform.waring_instantiation(q, k),
                "Waring with Sigma values = closed form")
        for k in range(1, kmax + 1)
    ]


# =============================================================================
# スイートの定義と実行
# =============================================================================

Job = tuple[Callable[..., list[CaseRecord]], tuple]


def suite_jobs(name: str, kmax: Optional[int] = None, degree: Optional[int] = None) -> list[Job]:
    """スイート名からケースの一覧を作る"""

    def k_(default: int) -> int:
        return default if kmax is None else kmax

    def d_(default: int) -> int:
        return default if degree is None else degree

    match name:
        case "t1":
            return [(case_field, (q, k_(60))) for q in (2, 3, 4, 5, 7, 8, 9, 16)]
        case "tmain":
            jobs: list[Job] = [
                (case_closed_vs_brute, ("tmain", f"Zmod({n})", k_(40), "cyclic closed form = brute force"))
                for n in (4, 8, 16, 32, 9, 27, 25, 49)
            ]
            jobs += [
                (case_closed_vs_brute, ("tmain", spec, k_(40), "char 2 exceptional ring = brute force"))
                for spec in ("Nil(GF(2),2)", "UT(2,GF(2))")
            ]
            jobs += [(case_even_vanishing, (spec, k_(40))) for spec in ("Nil(GF(2),2)", "UT(2,GF(2))")]
            jobs += [
                (case_closed_vs_brute, ("tmain", spec, k_(30), "product rule = brute force"))
                for spec in ("Zmod(6)", "Zmod(12)", "Zmod(30)", "Prod(GF(4),Zmod(9))")
            ]
            jobs += [(case_cyclic_lift, (p, m, k_(20))) for p, m in ((2, 2), (2, 3), (3, 2), (3, 3), (5, 2))]
            return jobs
        case "twitt":
            catalog = [
                ("GF(2)", 8), ("GF(4)", 8), ("GF(8)", 16), ("GF(9)", 18),
                ("Zmod(4)", 8), ("Zmod(8)", 16), ("Zmod(9)", 18), ("GR(2,2,2)", 8),
                ("Nil(GF(2),2)", 8), ("Nil(GF(3),2)", 9), ("Nil(GF(3),3)", 9), ("Nil(Zmod(9),2)", 9),
            ]
            jobs = [(case_twitt_span, (spec, d_(d))) for spec, d in catalog]
            jobs.append((case_class_independence, ("Nil(GF(3),2)", "Nil(GF(3),3)", d_(9))))
            jobs += [(case_lift, (spec,)) for spec in ("Zmod(4)", "Zmod(8)", "GR(2,2,2)")]
            return jobs
        case "bcl":
            return [(case_matrix_zeta, ("Mat(2,GF(2))", 0, k_(36)))] + [
                (case_matrix_zeta, (spec, 1, k_(20))) for spec in ("Mat(2,GF(3))", "Mat(2,GF(4))", "Mat(3,GF(2))")
            ]
        case "erratum":
            return [(case_erratum, (k_(16),))]
        case "fgor":
            return [(case_fgor, (n, k_(13))) for n in (6, 10, 3, 4, 5)]
        case "negk":
            return [(case_negative, (q, k_(6))) for q in (2, 3, 4)]
        case "waring":
            jobs = [(case_waring_numeric, (n, k)) for n in range(1, 5) for k in range(1, k_(8) + 1)]
            jobs += [(case_sigma_table, (q,)) for q in (2, 3, 4, 5, 7, 8)]
            jobs += [(case_waring_instantiation, (q, k_(20))) for q in (2, 3, 4, 5)]
            return jobs
        case "vanishing":
            return [
                (case_vanishing, (spec, k_(24)))
                for spec in ("UT(2,GF(3))", "Nil(GF(3),2)", "Nil(GF(2),3)", "Nil(GF(4),2)", "GR(2,2,2)", "Mat(2,Zmod(4))")
            ]
    raise RingSumsError(f"未知のスイート: {name}")


def _init_worker(settings_data: dict[str, Any]) -> None:
    settings = use_settings(Settings(**settings_data))
    setup_logging(settings.log_level, settings.log_json)


def _run_job(job: Job) -> list[CaseRecord]:
    function, args = job
    return function(*args)


def run_suite(
    name: str,
    kmax: Optional[int] = None,
    degree: Optional[int] = None,
    jobs: Optional[int] = None,
) -> SuiteReport:
    """
    スイートを実行する

    Args:
        name: スイート名
        kmax: 指数の上限（None なら各スイートの既定値）
        degree: 次数上限 D（twitt のみ）
        jobs: 並列度（None なら設定値）
    """
    settings = get_settings()
    workers = settings.jobs if jobs is None else jobs
    job_list = suite_jobs(name, kmax, degree)
    start = time.perf_counter()
    with PerformanceLogger(logger, f"suite {name}", jobs=len(job_list), workers=workers):
        if workers > 1 and len(job_list) > 1:
            with ProcessPoolExecutor(
                max_workers=workers,
                initializer=_init_worker,
                initargs=(settings.model_dump(),),
            ) as pool:
                batches = list(pool.map(_run_job, job_list))
        else:
            batches = [_run_job(job) for job in job_list]
    records = sorted((r for batch in batches for r in batch), key=lambda r: _sort_key(r.key))
    report = SuiteReport(name, records, time.perf_counter() - start)
    logger.info("スイート完了", suite=name, passed=report.passed, failed=report.failed)
    return report


def _sort_key(key: tuple) -> tuple:
    return tuple((0, v) if isinstance(v, int) else (1, str(v)) for v in key)


def run_suites(names: list[str], **options: Any) -> list[SuiteReport]:
    """"all" を展開して順に実行する"""
    expanded: list[str] = []
    for name in names:
        expanded.extend(SUITE_NAMES if name == "all" else [name])
    return [run_suite(name, **options) for name in expanded]
