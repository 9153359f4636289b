"""
Towers Command

Tower states in every chirality sector of the XXZ model: their span, the
eigenvalue cluster at the helix energy and each state's residual there.
"""

import time
import logging
from itertools import product

from .base_command import BaseCommand, CommandResult, ResultTable
from ..core.lattice import ChiralityVector
from ..exceptions import ConfigurationError
from ..helix.product_state import shs_energy, variant_witness
from ..helix.tower import tower_family
from ..verification.degeneracy import degeneracy_scan, predicted_tower_dimension

logger = logging.getLogger(__name__)


def predicted_dimension(spec) -> int:
    """2sV + 1 at the isotropic point (all chiralities coincide), 2^d(2sV − 1) + 2 otherwise."""
    eta = spec.eta_value
    if abs(eta.imag) < 1e-14 and abs(eta.real - 2.0 * round(eta.real / 2.0)) < 1e-14:
        return spec.spin.twice_s * spec.volume + 1
    return predicted_tower_dimension(spec.d, spec.spin.twice_s, spec.volume)


class TowersCommand(BaseCommand):
    """Gram rank and degeneracy of the tower family."""

    def get_command_name(self) -> str:
        return "towers"

    def get_command_description(self) -> str:
        return "Tower-state span versus the exact-diagonalization cluster"

    def validate_config(self, provider) -> bool:
        if provider.get_model_config()["variant"] != "xxz":
            raise ConfigurationError("model.variant: the towers command needs 'xxz'")
        return True

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        spec = self.provider.build_model()
        witness = variant_witness(spec, self.provider.get_tolerance("commensurability"))
        epsilons = [ChiralityVector(signs) for signs in product((1, -1), repeat=spec.d)]
        towers = tower_family(spec, epsilons)
        target = shs_energy(spec, witness)

        report = degeneracy_scan(
            spec, target, [t.amplitudes for t in towers],
            predicted_dimension=predicted_dimension(spec),
            cluster_tol=self.provider.get_tolerance("cluster"),
            rank_tol=self.provider.get_tolerance("rank"),
        )
        residual_ok = report.max_state_residual <= self.provider.get_tolerance("residual")
        passed = report.passed and residual_ok

        table = ResultTable("Tower states", ["quantity", "value"])
        table.rows.extend([
            ["energy", f"{report.target_energy:.10g}"],
            ["tower states", len(towers)],
            ["span dimension", report.span_dimension],
            ["predicted", report.predicted_dimension],
            ["cluster size", report.cluster_size],
            ["max state residual", f"{report.max_state_residual:.2e}"],
            ["status", "PASS" if passed else "FAIL"],
        ])
        result = report.to_dict()
        result["passed"] = passed
        results = [result]
        files = [self.write_report(results, started)]
        return self.finish(started, passed, results, [table], files)
