import sys

from interpcat.cli import main

sys.exit(main())
