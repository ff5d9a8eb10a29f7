"""Python bindings for the beurling toolkit.

Functions returning reports give parsed JSON dicts; exact rationals come back as Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BeurlingError, BudgetExceeded, InvalidArgument

__all__ = [
    "BeurlingError",
    "BudgetExceeded",
    "InvalidArgument",
    "ladder_power",
    "ladder_report",
    "lemma42_report",
    "nk5",
    "run",
    "word_length",
    "word_length_report",
]

report_schema_version = _core.report_schema_version
psi_schema_version = _core.psi_schema_version


def nk5(k):
    return int(_core.nk5(k))


def word_length_report(n, schedule="squares2", cap=64):
    return json.loads(_core.word_length_report(str(int(n)), schedule, cap))


def word_length(n, schedule="squares2", cap=64):
    """Exact word length of n, or None past the cap."""
    check = word_length_report(n, schedule, cap)["checks"][0]
    if check["status"] != "verified":
        return None
    return check["length"]


def lemma42_report(kmax=5, oracle_kmax=3):
    return json.loads(_core.lemma42_report(kmax, oracle_kmax))


def ladder_report(j=2, base=4, growth=4, power=3):
    return json.loads(_core.ladder_report(j, base, growth, power))


def ladder_power(j, base, growth, power):
    return Fraction(_core.ladder_power(j, base, growth, power))


def run(*args):
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
