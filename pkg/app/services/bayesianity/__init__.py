"""x-normalization diagnostic and likelihood extraction."""
