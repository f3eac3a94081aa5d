"""Structural parameters indexing the extremal bounds."""
