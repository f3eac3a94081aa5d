"""Report export and summaries."""
