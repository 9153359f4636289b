"""
Couplings Command

Evaluates the exchange constants for the configured η and τ.
"""

import time
import logging

from .base_command import BaseCommand, CommandResult, ResultTable
from ..exceptions import ConfigurationError
from ..model.couplings import complex_pair, couplings_xxz, couplings_xyz
from ..model.model_spec import XY_VARIANTS, XY_ETA
from ..model.parameters import EtaParameter

logger = logging.getLogger(__name__)


class CouplingsCommand(BaseCommand):
    """(J_x, J_y, J_z) for each configured η; no lattice needed."""

    def get_command_name(self) -> str:
        return "couplings"

    def get_command_description(self) -> str:
        return "Exchange constants J_x, J_y, J_z from eta and tau"

    def validate_config(self, provider) -> bool:
        model = provider.get_model_config()
        if model["variant"] in XY_VARIANTS:
            return True
        if "eta" not in model and "eta_per_axis" not in model:
            raise ConfigurationError("model.eta: required by the couplings command")
        return True

    def _eta_inputs(self):
        model = self.provider.get_model_config()
        if model["variant"] in XY_VARIANTS:
            return [XY_ETA[model["variant"]]]
        if model.get("eta_per_axis"):
            return [EtaParameter.parse(e) for e in model["eta_per_axis"]]
        return [EtaParameter.parse(model["eta"])]

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        model = self.provider.get_model_config()
        ctx = self.provider.build_context()
        table = ResultTable("Couplings", ["eta", "Jx", "Jy", "Jz"])
        results = []
        for eta in self._eta_inputs():
            value = eta.resolve(ctx.tau)
            if model["variant"] == "xxz":
                couplings = couplings_xxz(value)
            else:
                couplings = couplings_xyz(value, ctx)
            entry = {"eta": eta.to_config(), "eta_value": complex_pair(value),
                     "tau": complex_pair(ctx.tau)}
            entry.update(couplings.to_dict())
            entry["j_plus"] = complex_pair(couplings.j_plus)
            entry["j_minus"] = complex_pair(couplings.j_minus)
            results.append(entry)
            table.rows.append([str(eta), *(f"{j:.10g}" for j in couplings.as_tuple())])
            logger.debug(f"Couplings at eta={eta}: {couplings.as_tuple()}")

        files = [self.write_report(results, started)]
        return self.finish(started, True, results, [table], files)
