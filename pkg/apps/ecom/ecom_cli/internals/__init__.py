"""Argument parsing, console output and report writing shared by the commands."""
