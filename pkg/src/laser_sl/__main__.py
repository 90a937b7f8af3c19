"""Allow ``python -m laser_sl``."""

from laser_sl.cli.main import main

raise SystemExit(main())
