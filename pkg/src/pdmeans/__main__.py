import sys

from pdmeans.cli import main

sys.exit(main())
