import sys

from senweaver_bms.cli import main

sys.exit(main())
