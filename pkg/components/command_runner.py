"""
Command Runner module for the spin helix toolkit.

Resolves the configured command, runs it, and hands the result to the UI.
"""

import logging

from .commands.base_command import CommandResult
from .execution.command_selector import CommandSelector
from .services.config_provider import ConfigurationProvider
from .services.output_manager import OutputManager

logger = logging.getLogger(__name__)


class CommandRunner:
    """Runs one configured command end to end."""

    def __init__(self, ui_manager, provider: ConfigurationProvider):
        self.ui = ui_manager
        self.provider = provider
        self.output = OutputManager(str(provider.get_output_dir()))
        self.selector = CommandSelector(provider, self.output)

    def run(self) -> CommandResult:
        """
        Execute the configured command and display its outcome.

        Raises:
            HelixError: Validation or model errors, propagated to main
        """
        command = self.selector.get_command()
        self.ui.display_run_header(command.get_command_name(), command.get_command_description(),
                                   self.provider)
        with self.ui.create_spinner(f"Running {command.get_command_name()}..."):
            result = command.execute()
        self.ui.display_command_result(result)
        return result
