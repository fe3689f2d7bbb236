"""Differentially private hybrid quantum-classical time-series forecasting lab."""

__version__ = "0.1.0"
