import sys

from hyperpart.cli import main

sys.exit(main())
