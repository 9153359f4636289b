"""
Base Command Interface

Abstract base class for all CLI commands.
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from ..services.config_provider import ConfigurationProvider
from ..services.output_manager import OutputManager

logger = logging.getLogger(__name__)


@dataclass
class ResultTable:
    """Rows for console display; never written to disk."""
    title: str
    columns: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)


@dataclass
class CommandResult:
    """Standardized result from any command."""
    command: str
    passed: bool
    processing_time: float
    results: List[Dict[str, Any]] = field(default_factory=list)
    tables: List[ResultTable] = field(default_factory=list)
    files: List[Path] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)


class BaseCommand(ABC):
    """Abstract base class for commands."""

    def __init__(self, provider: ConfigurationProvider, output: OutputManager):
        self.provider = provider
        self.output = output

    @abstractmethod
    def execute(self) -> CommandResult:
        """
        Run the command and write its output files.

        Returns:
            CommandResult with report dictionaries, display tables and files
        """
        pass

    @abstractmethod
    def get_command_name(self) -> str:
        """Return the name of this command."""
        pass

    @abstractmethod
    def get_command_description(self) -> str:
        """Return description of what this command does."""
        pass

    def validate_config(self, provider: ConfigurationProvider) -> bool:
        """
        Validate that the configuration carries what this command needs.

        Raises:
            ConfigurationError: Naming the missing field
        """
        return True

    # Shared output helpers

    def output_name(self, suffix: str) -> str:
        """File name from output.name, defaulting to the command name."""
        base = self.provider.get_output_config().get("name") or self.get_command_name()
        return f"{base}{suffix}"

    def write_report(self, results: Sequence[Dict[str, Any]], started: float,
                     suffix: str = ".json") -> Path:
        """JSON document echoing the resolved config next to the results."""
        document = OutputManager.report_document(
            self.provider.to_dict(), results, time.perf_counter() - started
        )
        return self.output.write_json(self.output_name(suffix), document)

    def finish(self, started: float, passed: bool, results: List[Dict[str, Any]],
               tables: List[ResultTable], files: List[Path],
               metadata: Tuple[Tuple[str, Any], ...] = ()) -> CommandResult:
        elapsed = time.perf_counter() - started
        status = "passed" if passed else "FAILED"
        logger.info(f"Command {self.get_command_name()} {status} in {elapsed:.2f}s")
        return CommandResult(
            command=self.get_command_name(),
            passed=passed,
            processing_time=elapsed,
            results=results,
            tables=tables,
            files=files,
            metadata=dict(metadata),
        )
