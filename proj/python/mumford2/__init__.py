"""Exact tropicalization of genus-2 Mumford curves."""
from ._mumford2 import (Error, ParseError, PrecisionError, classify, log_abs,
                        parse, tropicalize, verify)

__all__ = ["Error", "ParseError", "PrecisionError", "classify", "log_abs",
           "parse", "tropicalize", "verify"]
