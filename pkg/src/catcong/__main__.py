import sys

from catcong.cli import main

sys.exit(main())
