"""Tests for the tcohom.cli package."""
