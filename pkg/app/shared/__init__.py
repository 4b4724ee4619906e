"""Building blocks used by several services: experiment documents, predictive families, errors and table output."""
