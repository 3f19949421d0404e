"""Entry point for `python -m braidforms`."""

from .cli import main

main()
