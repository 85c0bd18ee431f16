import sys

from farekit.cli import main

sys.exit(main())
