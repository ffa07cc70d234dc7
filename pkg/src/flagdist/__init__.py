"""Exact multi-graded structure of rational homogeneous spaces G/Q."""

__version__ = "0.1.0"
