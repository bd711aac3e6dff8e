import os

NAME="dispersive-observability"
VERSION="1.0"
CWD=os.path.dirname(os.path.abspath(__file__))
LOG_LEVEL="INFO"
