"""Tests for the tcohom.utils package."""
