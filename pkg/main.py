#!/usr/bin/env python3
from jrdegree.cli import cli

cli.main()
