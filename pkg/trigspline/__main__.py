"""Run ``python -m trigspline``."""

import sys

from .cli import main

sys.exit(main())
