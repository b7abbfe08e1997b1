"""Batch driver over the check registry and the table reproductions."""

from __future__ import annotations

from .main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, main
from .registry import BY_NAME, REGISTRY, Check, check_names, select
from .tables import TABLES, table

__all__ = ["BY_NAME", "EXIT_FAIL", "EXIT_OK", "EXIT_USAGE", "REGISTRY", "TABLES", "Check", "build_parser",
           "check_names", "main", "select", "table"]
