import sys

from orbitclosure.cli import main

sys.exit(main())
