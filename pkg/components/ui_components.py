"""
UI Components module for the spin helix toolkit.

Rich-based console output:
- UIManager: run headers, result tables, written files and error panels
- Helpers for standardized tables and panels
"""

from contextlib import nullcontext

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.status import Status
from rich.table import Table
from rich.text import Text


class UIManager:
    """Manages all console output for a CLI run."""

    def __init__(self, quiet: bool = False, console: Console = None):
        """
        Args:
            quiet: Suppress everything except errors
            console: Optional console (tests pass a recording console)
        """
        self.console = console or Console(highlight=False)
        self.quiet = quiet

    def print(self, *args, **kwargs):
        if not self.quiet:
            self.console.print(*args, **kwargs)

    def display_run_header(self, command_name, description, provider):
        """Command name and the model it runs on."""
        if self.quiet:
            return
        model = provider.get_model_config()
        header = Text()
        header.append(f"{command_name}\n", style="bold white")
        header.append(f"{description}\n", style="dim")
        header.append(
            f"variant={model['variant']}  2s={model['twice_s']}  dims={model['dims']}  "
            f"eta={model.get('eta', model.get('eta_per_axis', '-'))}  tau={model['tau']}",
            style="cyan",
        )
        self.console.print(Panel(header, border_style="cyan", padding=(0, 2), expand=False))

    def create_info_table(self, title, columns, box_style=box.ROUNDED,
                          title_style="bold green", header_style="bold cyan"):
        """Create a standardized info table with common styling."""
        table = Table(
            title=title,
            box=box_style,
            title_style=title_style,
            show_header=True,
            header_style=header_style,
        )
        for column in columns:
            table.add_column(str(column))
        return table

    def create_status_panel(self, message, style="green", border_style=None):
        """Create a standardized status panel."""
        return Panel.fit(message, border_style=border_style or style)

    def display_command_result(self, result):
        """Result tables, written files and the overall status."""
        if self.quiet:
            return
        for result_table in result.tables:
            table = self.create_info_table(result_table.title, result_table.columns)
            for row in result_table.rows:
                table.add_row(*(str(v) for v in row))
            self.console.print(table)

        if result.files:
            files_table = self.create_info_table("Files written", ["path"], box_style=box.SIMPLE)
            for path in result.files:
                files_table.add_row(str(path))
            self.console.print(files_table)

        if result.passed:
            message = f"[bold green]All checks passed[/bold green] ({result.processing_time:.2f}s)"
            self.console.print(self.create_status_panel(message))
        else:
            message = f"[bold red]Some checks failed[/bold red] ({result.processing_time:.2f}s)"
            self.console.print(self.create_status_panel(message, style="red"))

    def display_error(self, message, hint=None):
        """Errors are shown even in quiet mode."""
        body = f"[bold red]Error:[/bold red] {message}"
        if hint:
            body += f"\n[dim]{hint}[/dim]"
        self.console.print(self.create_status_panel(body, style="red"))

    def display_interrupted(self):
        self.console.print("\n[yellow]Operation cancelled by user (Ctrl+C)[/yellow]")

    def create_spinner(self, message):
        """Rich Status used as a context manager around a command."""
        if self.quiet:
            return nullcontext()
        return Status(f"[dim]{message}[/dim]", console=self.console, spinner="dots")
