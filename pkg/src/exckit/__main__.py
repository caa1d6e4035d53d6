import sys

from exckit.cli import main

sys.exit(main())
