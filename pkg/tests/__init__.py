"""Test suite for tritest."""
