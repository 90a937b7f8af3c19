"""Integration tests for laser-sl."""
