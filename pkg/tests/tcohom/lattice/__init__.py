"""Tests for the tcohom.lattice package."""
