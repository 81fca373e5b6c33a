"""Init test for AttrDict module."""
