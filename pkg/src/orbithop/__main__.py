import sys

from orbithop.cli import main

sys.exit(main())
