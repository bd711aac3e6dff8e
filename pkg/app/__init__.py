"""
Observability of linear dispersive equations on the torus from line segments
"""
