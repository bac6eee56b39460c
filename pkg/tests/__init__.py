"""Tests for canonical-basis."""
