"""Empirical-likelihood and exponential-tilting quasi-posteriors."""
