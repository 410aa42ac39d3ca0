"""Allow `python -m projsat`."""

from .cli import main

main()
