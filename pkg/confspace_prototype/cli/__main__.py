"""``python -m confspace_prototype.cli``, same as the ``confspace`` script"""

from .main import main

raise SystemExit(main())
