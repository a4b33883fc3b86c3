import sys

from termsing.cli import main

sys.exit(main())
