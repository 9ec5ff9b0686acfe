from apfilter.cli import main
import sys

sys.exit(main())
