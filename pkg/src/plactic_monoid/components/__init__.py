"""
Front-end components for the plactic monoid toolkit.
"""
from plactic_monoid.components.cli import PlacticCLI, main

__all__ = ['PlacticCLI', 'main']
