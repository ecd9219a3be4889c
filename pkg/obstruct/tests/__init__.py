"""Unit tests for obstruct."""
