"""Corpus preprocessing and threshold-gated key-term selection toolkit."""

__version__ = "0.1.0"
