"""Dissipative laser generators and their stochastic-limit counterparts."""

__version__ = "0.1.0"
