"""Extremal witness families and basic parametric graphs."""
