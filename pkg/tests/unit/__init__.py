"""Unit tests for laser-sl."""
