"""Immutable simple graphs, graph6 codec and graph surgeries."""
