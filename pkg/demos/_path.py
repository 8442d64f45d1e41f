"""Make the demos runnable from a fresh checkout, without installing."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
SRC = str(ROOT / "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

DATA = ROOT / "data"
OUTPUT = Path(__file__).resolve().parent / "output"
