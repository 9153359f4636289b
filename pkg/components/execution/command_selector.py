"""
Command Selector

Maps command names to command classes and instantiates them with
validated configuration.
"""

import logging
from typing import Dict, Type

from ..commands import (
    BaseCommand,
    CouplingsCommand,
    DivergenceCommand,
    EntropyCommand,
    IdentitiesCommand,
    SpectrumCommand,
    TextureCommand,
    TowersCommand,
    VerifySHSCommand,
)
from ..exceptions import ConfigurationError
from ..services.config_provider import ConfigurationProvider
from ..services.output_manager import OutputManager

logger = logging.getLogger(__name__)


class CommandSelector:
    """Selects and instantiates the command named in the configuration."""

    COMMANDS: Dict[str, Type[BaseCommand]] = {
        'couplings': CouplingsCommand,
        'identities': IdentitiesCommand,
        'verify-shs': VerifySHSCommand,
        'texture': TextureCommand,
        'spectrum': SpectrumCommand,
        'entropy': EntropyCommand,
        'divergence': DivergenceCommand,
        'towers': TowersCommand,
    }

    def __init__(self, provider: ConfigurationProvider, output: OutputManager):
        self.provider = provider
        self.output = output

    def get_command(self, command_name: str = None) -> BaseCommand:
        """
        Instantiate a command; defaults to the configured one.

        Raises:
            ConfigurationError: If the name is unknown or validation fails
        """
        if command_name is None:
            command_name = self.provider.get_command()
        if command_name not in self.COMMANDS:
            available = ', '.join(self.COMMANDS)
            raise ConfigurationError(f"command: '{command_name}' unknown. Available commands: {available}")

        command = self.COMMANDS[command_name](self.provider, self.output)
        if not command.validate_config(self.provider):
            raise ConfigurationError(f"Configuration validation failed for command '{command_name}'")
        logger.info(f"Initialized command: {command.get_command_description()}")
        return command

    def list_available_commands(self) -> Dict[str, str]:
        """Command names with their descriptions."""
        return {
            name: command_class(self.provider, self.output).get_command_description()
            for name, command_class in self.COMMANDS.items()
        }
