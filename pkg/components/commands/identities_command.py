"""
Identities Command

Runs the theta-function identity catalogue on seeded random samples.
"""

import time
import logging

from .base_command import BaseCommand, CommandResult, ResultTable
from ..core.identity_suite import identity_suite

logger = logging.getLogger(__name__)


class IdentitiesCommand(BaseCommand):
    """Identity sweep at the configured τ, seed and sample count."""

    def get_command_name(self) -> str:
        return "identities"

    def get_command_description(self) -> str:
        return "Theta-function identity suite on seeded random samples"

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        report = identity_suite(
            self.provider.build_context(),
            sample_count=self.provider.get_samples(),
            rng_seed=self.provider.get_seed(),
            tolerance=self.provider.get_tolerance("identity"),
        )
        table = ResultTable("Identities", ["identity", "max residual", "samples", "status"])
        for result in report.results:
            table.rows.append([result.name, f"{result.max_residual:.2e}", result.samples,
                               "PASS" if result.passed else "FAIL"])
        for failure in report.failures():
            logger.warning(f"Identity {failure.name} failed: residual {failure.max_residual:.3e}")

        results = [report.to_dict()]
        files = [self.write_report(results, started)]
        return self.finish(started, report.passed, results, [table], files)
