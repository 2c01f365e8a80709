from uniharary.cli import main
import sys

sys.exit(main())
