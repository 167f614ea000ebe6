"""Tests for the tcohom package."""
