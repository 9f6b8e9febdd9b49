from posetres.cli import main
import sys

sys.exit(main())
