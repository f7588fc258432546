import sys

from rimhook.cli import main

sys.exit(main())
