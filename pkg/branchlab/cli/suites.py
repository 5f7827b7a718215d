"""
Verification suites run by `branchlab verify`
"""
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional

import numpy as np
from loguru import logger

from branchlab.analytic import (
    check_cocycle_identity,
    check_diagonal_normalization,
    check_equivariance,
    check_hermitian_symmetry,
    check_nakahama,
    check_refined_factorization,
    check_sbo_split,
    check_separation_formula,
    check_transfer,
    check_vs_norms,
)
from branchlab.branchdual import branch, uh0w_spectrum
from branchlab.cli.params import ParameterRequest, resolve_parameter
from branchlab.compactrep.characters import character, irrep_dim, restrict_decompose
from branchlab.config import settings
from branchlab.errors import BranchlabError, UnsupportedModelError
from branchlab.holomodel import (
    diagonal_model,
    holographic_map_from_phi,
    holographic_phi,
    holomorphic_model,
    intertwine_check,
    lwh_subspace,
    q_gram_determinants,
    uh0w_subspace,
)
from branchlab.models import CheckResultModel, ResidualReportModel, Status, SuiteResultModel
from branchlab.rootsys.cartan import build_root_datum
from branchlab.rootsys.chevalley import AlgebraElement, chevalley_constants
from branchlab.rootsys.weight import Weight
from branchlab.sympair.catalog import ParamKind
from branchlab.sympair.pair import bracket_condition, build_pair

# residuals at or below this are rounding noise when comparing truncations
ROUNDING_FLOOR = 1e-13


@dataclass(frozen=True)
class SuiteOptions:
    """Overrides shared by every suite"""
    quick: bool = False
    truncation: Optional[int] = None
    samples: Optional[int] = None
    tolerance: Optional[float] = None


def _check(name: str, ok: bool, detail: str = "", max_residual: Optional[float] = None) -> CheckResultModel:
    return CheckResultModel(name=name, status=Status.PASS if ok else Status.FAIL, detail=detail,
                            max_residual=max_residual)


def _from_residuals(report: ResidualReportModel) -> CheckResultModel:
    detail = f"lam={report.lam} lam2={report.lam2} n={report.n} N={report.truncation} samples={report.samples}"
    if report.informational is not None:
        detail += f" holomorphic deviation={report.informational:.3e}"
    return _check(report.check, report.passed, detail, report.max_residual)


def e6f4_expected(pair, n: int, cutoff: int) -> Dict[Weight, int]:
    """Z_{n,m} = (n + 18 + m) alpha_max/2 + m w1 with w1 = (alpha1 + alpha3 + alpha4 + alpha5 + alpha6)/2"""
    alpha = pair.ambient.simple_roots
    alpha_max = pair.ambient.highest_root
    w1 = (alpha[0] + alpha[2] + alpha[3] + alpha[4] + alpha[5]) / 2
    return {alpha_max * (n + 18 + m) / 2 + w1 * m: 1 for m in range(cutoff + 1)}


def suite_e6f4(options: SuiteOptions) -> List[CheckResultModel]:
    pair = build_pair("e6f4")
    cutoff = settings.quick_cutoff if options.quick else 4
    checks = []
    for n in (1,) if options.quick else (1, 2):
        ds = resolve_parameter(pair, ParameterRequest(values={"n": n}))
        table = branch(pair, ds, cutoff)
        expected = e6f4_expected(pair, n, cutoff)
        ok = table.multiplicities() == expected and table.complete_below_cutoff
        checks.append(_check(f"e6f4 n={n}", ok, f"{len(table.entries)} entries up to degree {cutoff}"))
    return checks


SU11_PARAMETERS = ((2, 2), (2, 3), (3, 4))


def suite_su11(options: SuiteOptions) -> List[CheckResultModel]:
    pair = build_pair("su11su11_diag")
    cutoff = 3 if options.quick else 6
    step = pair.h0_noncompact_positive_weights[0]
    checks = []
    for lam, lam2 in SU11_PARAMETERS:
        ds = resolve_parameter(pair, ParameterRequest(values={"lam": lam, "lam2": lam2}))
        table = branch(pair, ds, cutoff)
        base = pair.qu_restrict(ds.lowest_ktype.weight)
        expected = {base + step * n: 1 for n in range(cutoff + 1)}
        rendered = " ".join(table.labels(w)[0] for w in table.ltypes())
        checks.append(_check(f"spectrum ({lam},{lam2})", table.multiplicities() == expected, rendered))

    degree = 4 if options.quick else 8
    for lam, lam2 in SU11_PARAMETERS[:1] if options.quick else SU11_PARAMETERS:
        model = diagonal_model(lam, lam2)
        lwh = lwh_subspace(model, 2)
        for n in range(3):
            phi = holographic_phi(lam, lam2, n, model)
            report = intertwine_check(model.pair, holographic_map_from_phi(model, phi, degree), degree)
            ok = report.exact and lwh.contains(phi)
            checks.append(_check(f"phi ({lam},{lam2}) n={n}", ok,
                                 f"intertwining defect {report.max_residual} over {report.inputs} inputs"))
    return checks


def _sample_request(sample) -> ParameterRequest:
    labels = ",".join(sample.labels)
    if sample.kind == ParamKind.HC:
        return ParameterRequest(hc=labels, system=sample.system)
    return ParameterRequest(ktype=labels, system=sample.system)


def suite_spin(options: SuiteOptions) -> List[CheckResultModel]:
    checks = []
    for m in (2,) if options.quick else (2, 3):
        pair = build_pair("spin2m2", m=m)
        cutoff = min(settings.quick_cutoff, pair.entry.default_cutoff) if options.quick else pair.entry.default_cutoff
        for sample in pair.entry.samples:
            ds = resolve_parameter(pair, _sample_request(sample))
            table = branch(pair, ds, cutoff)
            mults = sorted(set(e.multiplicity for e in table.entries))
            ok = bool(table.entries) and mults == [1]
            checks.append(_check(f"m={m} {sample.system} ({','.join(sample.labels)})", ok,
                                 f"{len(table.entries)} entries, multiplicities {mults}"))
    return checks


HOLOMORPHIC_CASES = (
    ("su11_self", None),
    ("su11su11_diag", None),
    ("sun1_un11_n2", "scalar"),
    ("sun1_un11_n2", "sym"),
    ("sun1_un11_n3", "scalar"),
)


def suite_duality(options: SuiteOptions) -> List[CheckResultModel]:
    degree = 3 if options.quick else 8
    gram_degree = 2 if options.quick else 6
    checks = []
    for pair_id, family in HOLOMORPHIC_CASES:
        pair = build_pair(pair_id)
        ds = resolve_parameter(pair, ParameterRequest(family=family))
        name = f"{pair_id}/{family or pair.entry.family_entry().name}"
        try:
            model = holomorphic_model(pair, ds.lowest_ktype)
        except UnsupportedModelError as e:
            logger.warning(f"Duality suite skips {name}: {e}")
            continue
        lwh = lwh_subspace(model, degree).dims()
        uh0w = uh0w_subspace(model, degree).dims()
        checks.append(_check(f"dims {name}", lwh == uh0w, f"L_WH {lwh} U(h0)W {uh0w}"))
        if model.action.wdim != 1:
            logger.info(f"Duality suite checks dimensions only for {name}: no inner product for non-scalar tau")
            continue
        dets = q_gram_determinants(model, gram_degree)
        checks.append(_check(f"gram {name}", all(d != 0 for d in dets),
                             f"{len(dets)} Gram determinants through degree {gram_degree}"))
    return checks


ORACLE_CASES = (("su11_self", None), ("su11su11_diag", None), ("sun1_un11_n2", "scalar"))


def suite_oracle(options: SuiteOptions) -> List[CheckResultModel]:
    cutoff = 3 if options.quick else 8
    checks = []
    for pair_id, family in ORACLE_CASES:
        pair = build_pair(pair_id)
        tau = resolve_parameter(pair, ParameterRequest(family=family)).lowest_ktype
        blattner = {w: c.multiplicity for w, c in uh0w_spectrum(pair, tau, cutoff, "blattner").items()}
        oracle = {w: c.multiplicity for w, c in uh0w_spectrum(pair, tau, cutoff, "oracle").items()}
        checks.append(_check(f"blattner=oracle {pair_id}", blattner == oracle,
                             f"{len(oracle)} L-types through degree {cutoff}"))
    return checks


BRACKET_EXPECTED = (("su11su11_diag", False), ("su11_self", True), ("sun1_un11_n2", True), ("sun1_un11_n3", True))


def suite_bracket(options: SuiteOptions) -> List[CheckResultModel]:
    checks = []
    for pair_id, expected in BRACKET_EXPECTED:
        value = bracket_condition(build_pair(pair_id))
        checks.append(_check(f"bracket {pair_id}", value == expected, f"got {value}, expected {expected}"))
    return checks


def suite_kernels(options: SuiteOptions) -> List[CheckResultModel]:
    samples = options.samples if options.samples is not None else (5 if options.quick else None)
    degrees = (0, 1) if options.quick else (0, 1, 2)
    kwargs = dict(samples=samples, tolerance=options.tolerance)
    checks = []
    for n in degrees:
        for check in (check_separation_formula, check_sbo_split, check_nakahama):
            checks.append(_from_residuals(check(2, 2, n, truncation=options.truncation, **kwargs)))
    for check in (check_separation_formula, check_nakahama):
        short = check(2, 2, 1, truncation=20, **kwargs).max_residual
        long = check(2, 2, 1, truncation=40, **kwargs).max_residual
        name = check.__name__.replace("check_", "")
        checks.append(_check(f"{name} N=20 vs N=40", long <= max(short, ROUNDING_FLOOR),
                             f"{short:.3e} -> {long:.3e}", long))
    for lam in (2, 3):
        for check in (check_cocycle_identity, check_equivariance, check_hermitian_symmetry,
                      check_transfer, check_diagonal_normalization):
            checks.append(_from_residuals(check(lam, **kwargs)))
        checks.append(_from_residuals(check_vs_norms(lam, tolerance=options.tolerance)))
    checks.append(_from_residuals(check_refined_factorization(**kwargs)))
    return checks


JACOBI_SAMPLES = 10_000


def _jacobi_failures(cartan_type: str) -> int:
    constants = chevalley_constants(build_root_datum(cartan_type))
    rd = constants.datum
    elements = [AlgebraElement.root_vector(r) for r in rd.roots]
    elements += [AlgebraElement(alpha) for alpha in rd.simple_roots]
    return sum(1 for x, y, z in product(elements, repeat=3) if not constants.jacobi(x, y, z).is_zero())


def sampled_jacobi_failures(cartan_type: str, samples: int, seed: int) -> int:
    """Jacobi identity on seeded random triples of Chevalley basis elements"""
    constants = chevalley_constants(build_root_datum(cartan_type))
    rd = constants.datum
    elements = [AlgebraElement.root_vector(r) for r in rd.roots]
    elements += [AlgebraElement(alpha) for alpha in rd.simple_roots]
    picks = np.random.default_rng(seed).integers(0, len(elements), size=(samples, 3))
    return sum(1 for i, j, k in picks if not constants.jacobi(elements[i], elements[j], elements[k]).is_zero())


def _representation_failures(degree: int) -> int:
    model = diagonal_model(2, 3)
    action = model.action
    rd = model.pair.ambient
    elements = [AlgebraElement.root_vector(r) for r in rd.roots]
    elements += [AlgebraElement(Weight.unit(rd.ambient_dim, i)) for i in range(rd.ambient_dim)]
    failures = 0
    for d in range(degree + 1):
        for p in action.basis(d):
            for x, y in product(elements, repeat=2):
                if not action.commutator_defect(x, y, p).is_zero():
                    failures += 1
    return failures


def _dimension_failures() -> int:
    failures = 0
    for pair_id, family in HOLOMORPHIC_CASES + (("e6f4", None),):
        pair = build_pair(pair_id)
        tau = resolve_parameter(pair, ParameterRequest(family=family)).lowest_ktype
        if sum(character(tau).values()) != irrep_dim(tau):
            failures += 1
        if restrict_decompose(tau, pair).total_dim() != irrep_dim(tau):
            failures += 1
    return failures


def suite_structure(options: SuiteOptions) -> List[CheckResultModel]:
    checks = []
    for cartan_type in ("A2", "B2") if options.quick else ("A2", "B2", "C3", "D4", "A1xA1"):
        failures = _jacobi_failures(cartan_type)
        checks.append(_check(f"jacobi {cartan_type}", failures == 0, f"{failures} failing triples"))
    samples = 1000 if options.quick else JACOBI_SAMPLES
    failures = sampled_jacobi_failures("E6", samples, settings.kernel_seed)
    checks.append(_check("jacobi E6 (sampled)", failures == 0, f"{failures} of {samples} seeded triples failing"))
    degree = 1 if options.quick else 3
    failures = _representation_failures(degree)
    checks.append(_check("representation su11su11_diag", failures == 0,
                         f"{failures} nonzero commutator defects through degree {degree}"))
    failures = _dimension_failures()
    checks.append(_check("dimension bookkeeping", failures == 0, f"{failures} mismatches"))
    return checks


SUITES: Dict[str, Callable[[SuiteOptions], List[CheckResultModel]]] = {
    "paper-e6f4": suite_e6f4,
    "su11": suite_su11,
    "spin": suite_spin,
    "duality": suite_duality,
    "oracle": suite_oracle,
    "bracket": suite_bracket,
    "kernels": suite_kernels,
    "structure": suite_structure,
}


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> SuiteResultModel:
    """
    Run a named suite, or every suite for "all".

    Raises:
        BranchlabError: unknown suite name
    """
    options = options or SuiteOptions()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise BranchlabError(f"Unknown suite {name}; available: {', '.join(list(SUITES) + ['all'])}")
    checks: List[CheckResultModel] = []
    for suite in names:
        logger.info(f"Running suite {suite}{' (quick)' if options.quick else ''}")
        results = SUITES[suite](options)
        if name == "all":
            results = [r.model_copy(update={"name": f"{suite}: {r.name}"}) for r in results]
        checks.extend(results)
    status = Status.FAIL if any(c.status == Status.FAIL for c in checks) else Status.PASS
    log = logger.info if status == Status.PASS else logger.warning
    log(f"Suite {name}: {status.value} ({len(checks)} checks)")
    return SuiteResultModel(suite=name, quick=options.quick, status=status, checks=checks)
