"""
Entropy Command

Tower-state entanglement entropy: closed form against the Schmidt spectrum.
"""

import time
import logging

from .base_command import BaseCommand, CommandResult, ResultTable
from ..exceptions import ConfigurationError
from ..verification.checks import check_entropy

logger = logging.getLogger(__name__)


class EntropyCommand(BaseCommand):
    """n defaults to half filling sV, va to half the sites."""

    def get_command_name(self) -> str:
        return "entropy"

    def get_command_description(self) -> str:
        return "Tower-state entanglement entropy versus Schmidt decomposition"

    def validate_config(self, provider) -> bool:
        if provider.get_model_config()["variant"] != "xxz":
            raise ConfigurationError("model.variant: the entropy command needs 'xxz'")
        return True

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        spec = self.provider.build_model()
        n = self.provider.get_state_int("n", spec.spin.twice_s * spec.volume // 2)
        va = self.provider.get_state_int("va", spec.volume // 2)
        report = check_entropy(spec, n, va, self.provider.get_tolerance("entropy"))

        table = ResultTable("Entanglement entropy", ["quantity", "value"])
        table.rows.extend([
            ["n", n],
            ["va", va],
            ["formula", f"{report.details['formula']:.12f}"],
            ["schmidt", f"{report.details['schmidt']:.12f}"],
            ["asymptotic", f"{report.details['asymptotic']:.6f}"],
            ["status", "PASS" if report.passed else "FAIL"],
        ])
        results = [report.to_dict()]
        files = [self.write_report(results, started)]
        return self.finish(started, report.passed, results, [table], files)
