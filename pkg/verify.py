"""
Verification Application - Runs the copolarity case analysis from the command line

Examples:
    python verify.py verify --mode paper --format json
    python verify.py verify --case c7-disc-conj
    python verify.py verify --mode exact --format md
    python verify.py mult A2 2 1 --shells
    python verify.py fixdim element A2 2 2 --direction 2 5 5 --order 6 --oracle
    python verify.py axioms --format md

Author: Copolarity-Verify
"""

from copolarity.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
