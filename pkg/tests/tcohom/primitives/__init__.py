"""Tests for the tcohom.primitives package."""
