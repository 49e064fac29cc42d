"""Layered random graphs with no 4-regular subgraph and large fractional
chromatic number: construction, exact verification, and inequality replay."""

__version__ = "0.1.0"
