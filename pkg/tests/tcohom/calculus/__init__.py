"""Tests for the tcohom.calculus package."""
