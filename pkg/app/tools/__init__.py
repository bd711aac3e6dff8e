# Individual tool imports for tool_factory.py
from .analyze_tool import analyze
from .pi_tool import pi_set
from .xi_tool import xi_class
from .graph_tool import graph
from .witness_tool import witness
from .ratio_tool import ratio
from .kdv_tool import kdv
from .oracle_tool import oracle_compare
from .sweep_tool import sweep

# Define what gets exported when using "from app.tools import *"
__all__ = [
    'analyze',
    'pi_set',
    'xi_class',
    'graph',
    'witness',
    'ratio',
    'kdv',
    'oracle_compare',
    'sweep',
]
