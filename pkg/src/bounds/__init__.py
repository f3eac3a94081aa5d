"""Closed-form extremal bounds, the constant c and certified numeric facts."""
