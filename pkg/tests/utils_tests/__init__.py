"""Init test for utils."""
