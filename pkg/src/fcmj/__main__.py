import sys

from fcmj.cli import main

sys.exit(main())
