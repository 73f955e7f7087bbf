"""Allow ``python -m meshperm`` as an alias for the ``meshperm`` script."""

from meshperm.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
