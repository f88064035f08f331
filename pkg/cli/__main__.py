import sys
from typing import List, Optional

from .cli import CLI


def main(argv: Optional[List[str]] = None) -> int:
    return CLI()(argv)


def run_cli(argv: Optional[List[str]] = None):
    sys.exit(main(argv))


if __name__ == "__main__":
    run_cli()
