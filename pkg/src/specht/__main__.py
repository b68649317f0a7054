import sys

from specht.cli import main

sys.exit(main())
