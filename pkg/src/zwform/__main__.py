"""Allow `python -m zwform`."""

from .cli import main

if __name__ == "__main__":
    main()
