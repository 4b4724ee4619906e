"""Command-line runner for all registered analysis commands."""
