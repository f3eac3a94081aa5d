"""Maximal independent set enumeration, counting and upper-bound recursions."""
