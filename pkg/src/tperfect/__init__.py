"""t-perfection tools for complements of line graphs."""
