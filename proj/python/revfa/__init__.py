"""Reversible one-way and sweeping finite automata."""

from ._revfa import (
    Machine,
    ParseError,
    equiv,
    load,
    minimize,
    parse,
    pin_check,
    save,
    search,
    to_dfa,
    to_mrfa,
    to_one_side,
    to_three_pass,
    to_two_pass,
    unary_to_srfa,
    witness,
    witness_names,
    witness_regex,
)

__all__ = [
    "Machine",
    "ParseError",
    "equiv",
    "load",
    "minimize",
    "parse",
    "pin_check",
    "save",
    "search",
    "to_dfa",
    "to_mrfa",
    "to_one_side",
    "to_three_pass",
    "to_two_pass",
    "unary_to_srfa",
    "witness",
    "witness_names",
    "witness_regex",
]
