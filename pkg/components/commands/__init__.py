"""
Commands Package

One class per CLI command, each implementing BaseCommand.
"""

from .base_command import BaseCommand, CommandResult, ResultTable
from .couplings_command import CouplingsCommand
from .identities_command import IdentitiesCommand
from .verify_shs_command import VerifySHSCommand
from .texture_command import TextureCommand
from .spectrum_command import SpectrumCommand
from .entropy_command import EntropyCommand
from .divergence_command import DivergenceCommand
from .towers_command import TowersCommand

__all__ = [
    'BaseCommand',
    'CommandResult',
    'ResultTable',
    'CouplingsCommand',
    'IdentitiesCommand',
    'VerifySHSCommand',
    'TextureCommand',
    'SpectrumCommand',
    'EntropyCommand',
    'DivergenceCommand',
    'TowersCommand',
]
