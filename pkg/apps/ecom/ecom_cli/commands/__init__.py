"""One module per CLI command, each exposing execute(args)."""
