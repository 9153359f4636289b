"""
Divergence Command

Two-site divergence identity at the configured u for both signs, followed
by a seeded sweep of random u in the sampling box.
"""

import time
import logging

import numpy as np

from .base_command import BaseCommand, CommandResult, ResultTable
from ..core.identity_suite import sample_box
from ..exceptions import ConfigurationError, DegenerateArgument, NearPole
from ..model.model_spec import XY_VARIANTS, XY_ETA
from ..model.parameters import EtaParameter
from ..verification.checks import check_divergence
from ..verification.reports import VerificationReport

logger = logging.getLogger(__name__)


class DivergenceCommand(BaseCommand):
    """Residuals of H_ij ψ(u)ψ(u±η) against the eigen plus telescoping terms."""

    def get_command_name(self) -> str:
        return "divergence"

    def get_command_description(self) -> str:
        return "Two-site divergence condition for both chiralities"

    def validate_config(self, provider) -> bool:
        model = provider.get_model_config()
        if model["variant"] not in XY_VARIANTS and "eta" not in model:
            raise ConfigurationError("model.eta: required by the divergence command")
        return True

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        model = self.provider.get_model_config()
        ctx = self.provider.build_context()
        spin = self.provider.build_spin()
        eta_input = XY_ETA[model["variant"]] if model["variant"] in XY_VARIANTS else model["eta"]
        eta = EtaParameter.parse(eta_input).resolve(ctx.tau)
        tolerance = self.provider.get_tolerance("divergence")
        sign = self.provider.get_state_int("sign")
        signs = (sign,) if sign is not None else (1, -1)

        reports = [check_divergence(spin, eta, ctx.tau, self.provider.get_u(), s, ctx, tolerance)
                   for s in signs]
        reports.append(self._sweep(spin, eta, ctx, signs, tolerance))

        table = ResultTable("Divergence condition", ["check", "sign", "residual", "status"])
        for report in reports:
            table.rows.append([report.check_name, report.parameters.get("sign", "±"),
                               f"{report.residual:.2e}", "PASS" if report.passed else "FAIL"])
        passed = all(r.passed for r in reports)
        results = [r.to_dict() for r in reports]
        files = [self.write_report(results, started)]
        return self.finish(started, passed, results, [table], files)

    def _sweep(self, spin, eta, ctx, signs, tolerance) -> VerificationReport:
        start = time.perf_counter()
        rng = np.random.default_rng(self.provider.get_seed())
        points = sample_box(ctx, self.provider.get_samples(), rng)
        worst, excluded = 0.0, 0
        for u in points:
            for s in signs:
                try:
                    residual = check_divergence(spin, eta, ctx.tau, complex(u), s, ctx, tolerance).residual
                except (NearPole, DegenerateArgument):
                    excluded += 1
                    continue
                worst = max(worst, residual)
        logger.debug(f"Divergence sweep: {len(points)} points, {excluded} excluded near poles")
        return VerificationReport(
            check_name="divergence_sweep",
            parameters={"samples": len(points), "seed": self.provider.get_seed(),
                        "signs": list(signs)},
            residual=worst,
            passed=worst <= tolerance,
            tolerance=tolerance,
            details={"excluded": excluded},
            wall_time=time.perf_counter() - start,
        )
