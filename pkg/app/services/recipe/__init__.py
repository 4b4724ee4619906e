"""Design recipe for Gibbs updates and its reporting checklist."""
