"""Run the command line when executing the package: python -m lah_bell"""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
