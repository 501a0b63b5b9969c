from qlink.cli import main

raise SystemExit(main())
