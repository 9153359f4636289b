"""Components package for the spin helix toolkit."""

from .command_runner import CommandRunner
from .ui_components import UIManager
from .exceptions import (
    HelixError, ConfigurationError, InvalidNome, NonConvergent, NearPole,
    InvalidSpin, InvalidDims, RangeTooLarge, DimensionMismatch,
    NotCommensurate, WrongLength, DegenerateArgument, OutOfRange,
    TooLarge, ModelError, OutputError
)

__all__ = [
    'CommandRunner',
    'UIManager',
    # Exceptions
    'HelixError',
    'ConfigurationError',
    'InvalidNome',
    'NonConvergent',
    'NearPole',
    'InvalidSpin',
    'InvalidDims',
    'RangeTooLarge',
    'DimensionMismatch',
    'NotCommensurate',
    'WrongLength',
    'DegenerateArgument',
    'OutOfRange',
    'TooLarge',
    'ModelError',
    'OutputError'
]
