"""python -m partmod"""

import sys

from partmod.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
