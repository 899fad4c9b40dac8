import sys

from openbilliard.cli import main

sys.exit(main())
