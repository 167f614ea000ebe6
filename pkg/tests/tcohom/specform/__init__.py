"""Tests for the tcohom.specform package."""
