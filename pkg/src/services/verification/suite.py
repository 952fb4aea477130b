"""
Runs every registered check and collects the results into a report.

A check that raises is recorded as a FAIL row carrying the error message;
the run itself only stops on errors outside the checks.
"""

import math
import uuid

import numpy as np

from src.config.settings import Settings, settings
from src.core.errors import ConvergenceError
from src.core.models import CheckResult, CheckStatus, ModelParams, VerificationReport
from src.infrastructure.logging import get_logger, reset_context
# registration order is report order
from src.services.verification import checks_quantum, checks_holomorphic, checks_classical  # noqa: F401
from src.services.verification.registry import Outcome, SuiteContext, get_all_checks, get_check

logger = get_logger(__name__)

# Recorded in every report; measured flags are refined by the checks.
DEFAULT_CONVENTIONS = {
    "L0_sign": "L0 = +u'/u",
    "coherent_label_sign": "psi_z follows the coefficient series",
    "zeta1_numerator_sign": "(2k + p - p zeta z)",
    "beta_index": "B(n+j+1, 2k+p-j)",
    "p_plus_symbol": "P+ = 4k z/(c - p s) [(2k+1)(2k+2)/(1-s)^2 + 2(p-1)(2k+1)/(1-s) + p(p-1)]",
    "p_plus_holomorphic": "z^n -> 2(n+2k)(n+c+1) z^(n+1)",
    "bracket_sign": "{F, G} = (i/g)(dF/dz* dG/dz - dF/dz dG/dz*)",
    "flow_hamiltonian": "initial flow under K0, transformed flow under P0",
    "measure_area_element": "area",
}


def _to_result(name: str, anchor: str, outcome: Outcome) -> CheckResult:
    if outcome.skip is not None:
        return CheckResult(name=name, anchor=anchor, residual=float(outcome.residual),
                           tolerance=outcome.tolerance, status=CheckStatus.SKIP, detail=outcome.skip)
    if outcome.lower_bound:
        ok = math.isfinite(outcome.residual) and outcome.residual > outcome.tolerance
        return CheckResult(name=name, anchor=anchor, residual=float(outcome.residual),
                           tolerance=outcome.tolerance,
                           status=CheckStatus.PASS if ok else CheckStatus.FAIL,
                           detail=(outcome.detail + "; must exceed the tolerance").lstrip("; "))
    return CheckResult.measured(name, anchor, float(outcome.residual), outcome.tolerance, outcome.detail)


def run_check(name: str, run: SuiteContext) -> CheckResult:
    entry = get_check(name)
    anchor = entry["anchor"]
    try:
        outcome = entry["function"](run)
    except ConvergenceError as e:
        logger.error("Check did not converge", check=name, error=str(e), residual=e.residual)
        return CheckResult(name=name, anchor=anchor, residual=float(e.residual), tolerance=0.0,
                           status=CheckStatus.FAIL, detail=f"ConvergenceError: {e}")
    except Exception as e:
        logger.error("Check raised", check=name, error=str(e), exc_info=True)
        return CheckResult(name=name, anchor=anchor, residual=float("nan"), tolerance=0.0,
                           status=CheckStatus.FAIL, detail=f"{type(e).__name__}: {e}")
    result = _to_result(name, anchor, outcome)
    log = logger.info if result.passed else logger.warning
    log("Check finished", check=name, status=result.status.value, residual=result.residual,
        tolerance=result.tolerance)
    return result


def run_suite(params: ModelParams, n_max: int | None = None, cfg: Settings | None = None,
              only: list[str] | None = None) -> VerificationReport:
    """Run the registered checks (or the subset `only`) for one parameter set."""
    cfg = settings if cfg is None else cfg
    n_max = cfg.verify.n_max if n_max is None else n_max
    reset_context(run_id=uuid.uuid4().hex[:8], b=params.b, p=params.p)
    names = list(dict.fromkeys(get_all_checks() if only is None else only))
    unknown = sorted(set(names) - set(get_all_checks()))
    if unknown:
        raise KeyError(f"unknown checks: {unknown}")

    run = SuiteContext(params=params, n_max=n_max, cfg=cfg, conventions=dict(DEFAULT_CONVENTIONS))
    logger.info("Verification started", checks=len(names), n_max=n_max)
    results = [run_check(name, run) for name in names]

    report = VerificationReport(
        metadata={
            "app": cfg.APP_NAME,
            "version": cfg.APP_VERSION,
            "params": params.describe(),
            "n_max": n_max,
            "grid": cfg.grid.model_dump(),
            "quadrature": cfg.quadrature.model_dump(),
            "tolerances": cfg.tolerances.model_dump(),
        },
        conventions=run.conventions,
        checks=results,
        gram_transformed=None if run.gram_transformed is None else np.real(run.gram_transformed).tolist(),
    )
    logger.info("Verification finished", passed=sum(r.passed for r in results),
                failed=len(report.failures), all_passed=report.all_passed)
    return report
