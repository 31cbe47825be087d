import sys

from contagious.cli import main

sys.exit(main())
