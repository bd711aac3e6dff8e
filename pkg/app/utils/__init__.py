"""
Shared helpers: logging, errors, exact polynomial arithmetic, parsing
"""
