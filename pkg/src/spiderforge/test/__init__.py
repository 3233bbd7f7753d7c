"""spiderforge tests."""
