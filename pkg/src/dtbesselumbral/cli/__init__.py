"""Command-line front end: commands, registry, argument parser and output rendering."""
