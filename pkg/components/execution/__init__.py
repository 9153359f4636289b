"""Execution layer for command dispatch."""

from .command_selector import CommandSelector

__all__ = ['CommandSelector']
