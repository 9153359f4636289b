"""
Spectrum Command

Dense diagonalization of a small model. Writes the eigenvalue list and,
when the helix state exists for the configuration, a degeneracy report of
the helix family against the eigenvalue cluster at its energy.
"""

import time
import logging

from .base_command import BaseCommand, CommandResult, ResultTable
from ..exceptions import NotCommensurate, WrongLength
from ..helix.product_state import build_shs, shs_energy
from ..verification.degeneracy import degeneracy_scan, spectrum

logger = logging.getLogger(__name__)


class SpectrumCommand(BaseCommand):
    """Eigenvalues plus the helix degeneracy report."""

    def get_command_name(self) -> str:
        return "spectrum"

    def get_command_description(self) -> str:
        return "Exact-diagonalization spectrum and helix degeneracy"

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        spec = self.provider.build_model()
        eigenvalues, hermitian = spectrum(spec)
        files = []
        results = []

        if self.provider.get_output_format() == "csv":
            files.append(self.output.write_spectrum_csv(self.output_name(".csv"), eigenvalues))
        else:
            results.append({"eigenvalues": list(eigenvalues), "hermitian": hermitian})

        report = self._helix_degeneracy(spec, eigenvalues, hermitian)
        passed = True
        table = ResultTable("Spectrum", ["quantity", "value"])
        table.rows.append(["eigenvalues", len(eigenvalues)])
        table.rows.append(["hermitian", hermitian])
        if report is not None:
            results.append(report.to_dict())
            passed = report.passed
            table.rows.extend([
                ["helix energy", f"{report.target_energy:.10g}"],
                ["cluster size", report.cluster_size],
                ["span dimension", report.span_dimension],
                ["max state residual", f"{report.max_state_residual:.2e}"],
            ])
        if results:
            files.append(self.write_report(results, started))
        return self.finish(started, passed, results, [table], files)

    def _helix_degeneracy(self, spec, eigenvalues, hermitian):
        epsilon = self.provider.get_epsilon()
        u_values = [None] if spec.variant == "open_chain_1d" else self.provider.get_u_values()
        try:
            states = [build_shs(u, epsilon, spec,
                                tolerance=self.provider.get_tolerance("commensurability"))
                      for u in u_values]
        except (NotCommensurate, WrongLength) as e:
            logger.warning(f"No helix state for this configuration ({e}); spectrum only")
            return None
        target = shs_energy(spec, states[0].witness)
        return degeneracy_scan(
            spec, target, [s.to_dense() for s in states],
            cluster_tol=self.provider.get_tolerance("cluster"),
            rank_tol=self.provider.get_tolerance("rank"),
            eigenvalues=eigenvalues, hermitian=hermitian,
        )
