"""Command-line interface of pinclass."""

from .main import create_parser, main, read_basis_file

__all__ = ["create_parser", "main", "read_basis_file"]
