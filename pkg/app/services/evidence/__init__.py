"""Evidence records, generalized Bayes factors and anchored evidence."""
