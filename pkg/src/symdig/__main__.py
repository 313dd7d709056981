import sys

from symdig.cli import main

sys.exit(main())
