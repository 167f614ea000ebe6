"""Package containing tests."""
