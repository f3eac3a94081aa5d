"""Shared utilities for the maximal independent set toolkit."""
