"""CLI, file formats, random codes and certificate verification."""
