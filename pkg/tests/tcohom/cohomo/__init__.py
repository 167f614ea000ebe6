"""Tests for the tcohom.cohomo package."""
