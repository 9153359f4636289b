"""
Texture Command

Local spin expectation values of the helix state, one row per site.
"""

import time
import logging

import numpy as np

from .base_command import BaseCommand, CommandResult, ResultTable
from ..helix.product_state import build_shs, texture

logger = logging.getLogger(__name__)

MAX_DISPLAY_ROWS = 16


class TextureCommand(BaseCommand):
    """Writes site, lattice coordinates and (⟨Sx⟩, ⟨Sy⟩, ⟨Sz⟩)."""

    def get_command_name(self) -> str:
        return "texture"

    def get_command_description(self) -> str:
        return "Local spin expectations of the spin-helix state"

    def execute(self) -> CommandResult:
        started = time.perf_counter()
        spec = self.provider.build_model()
        u = None if spec.variant == "open_chain_1d" else self.provider.get_u()
        state = build_shs(u, self.provider.get_epsilon(), spec,
                          tolerance=self.provider.get_tolerance("commensurability"))
        expectations = texture(state, spec.spin)
        coords = spec.lattice.site_coords

        values = np.asarray(expectations)
        summary = {
            "sites": spec.volume,
            "model": spec.to_dict(),
            "state": state.describe(),
            "max_abs": {axis: float(np.max(np.abs(values[:, i])))
                        for i, axis in enumerate(("sx", "sy", "sz"))},
        }
        if self.provider.get_output_format() == "csv":
            files = [self.output.write_texture_csv(self.output_name(".csv"), coords, expectations)]
        else:
            summary["rows"] = [[j, *map(int, coords[j]), *expectations[j]]
                               for j in range(spec.volume)]
            files = [self.write_report([summary], started)]

        table = ResultTable("Texture", ["site", "coords", "sx", "sy", "sz"])
        for j in range(min(spec.volume, MAX_DISPLAY_ROWS)):
            table.rows.append([j, str(tuple(map(int, coords[j]))),
                               *(f"{v:+.6f}" for v in expectations[j])])
        return self.finish(started, True, [summary], [table], files)
