"""Test package for arrayldpc."""
