#!/usr/bin/env python3
"""
hvec - Main Entry Point
Exact h-vectors of simplicial complexes and the identities relating them.
"""

import sys
from loguru import logger
from pathlib import Path

from hvec.cli import main as cli_main

# Set up logging
log_path = Path("logs")
log_path.mkdir(exist_ok=True)
logger.add(
    "logs/hvec_{time}.log",
    rotation="1 day",
    retention="7 days",
    level="INFO",
    format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}"
)


def main():
    """Main entry point."""
    try:
        return cli_main(sys.argv[1:])
    except Exception as e:
        logger.error(f"hvec crashed: {e}")
        raise


if __name__ == "__main__":
    sys.exit(main())
