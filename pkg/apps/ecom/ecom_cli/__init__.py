"""Command-line interface for Ecom."""
