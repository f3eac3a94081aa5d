"""Exhaustive and corpus-driven verification sweeps."""
