"""Packaged templates and support matrices."""
