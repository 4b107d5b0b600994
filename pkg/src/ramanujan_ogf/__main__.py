import sys

from ramanujan_ogf.cli import main

sys.exit(main())
