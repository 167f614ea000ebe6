"""Tests for the tcohom.checks package."""
