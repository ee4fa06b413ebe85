#!/usr/bin/env python3
"""Main entry point for the memristor spiking gate simulator."""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.ui.cli import app


if __name__ == "__main__":
    app(prog_name="spikegate")
