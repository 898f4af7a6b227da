#!/usr/bin/env python3
"""
Symmetric Chain Decomposition Runner Script

This script runs the scd command line, e.g. `run_scd.py generate --n 4`.
"""

import os
import sys

# Add the parent directory to sys.path to allow importing the src package
parent_dir = os.path.dirname(os.path.abspath(__file__))
if parent_dir not in sys.path:
    sys.path.append(parent_dir)

from src.app import main

if __name__ == '__main__':
    sys.exit(main())
