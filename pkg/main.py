#!/usr/bin/env python3

from filippov import main

raise SystemExit(main.main())
