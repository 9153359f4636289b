"""
Services Package

Run configuration and output file handling, independent of the console UI.
"""

from .config_provider import ConfigurationProvider
from .output_manager import OutputManager

__all__ = ['ConfigurationProvider', 'OutputManager']
