"""Tests for laser-sl."""
