#!/usr/bin/env python
"""Shim so that ``pip install -e .`` works without PEP 660 support."""
from setuptools import setup


if __name__ == "__main__":
    setup()
