"""Penalized objectives over the simplex, f-divergences, additivity and vNM rules."""
