"""Command-line interface and instance file format."""
from .fileio import FormatError, parse, parse_text, same_instance, serialize, serialize_text
from .main import main

__all__ = ["FormatError", "parse", "parse_text", "serialize", "serialize_text", "same_instance", "main"]
