from pathlib import Path
from typing import Callable, Mapping
import argparse

_type_priorities = [    # In decreasing order
    Path,
    str,
    int,
    float,
    bool,
]


def _priority(value):
    p = next((i for i, t in enumerate(_type_priorities) if type(value) is t), None)
    if p is not None:
        return p
    return next((i for i, t in enumerate(_type_priorities) if isinstance(value, t)),
                len(_type_priorities))


def format_params(params: Mapping, title: str, order=None):
    """
    Lays out a mapping of parameters as an aligned block of lines. Parameters are sorted by the
    given order (unknown names last), or by value type then name when no order is given.
    """
    if len(params) == 0:
        return [title + ": (none)"]
    if order is None:
        key = lambda name: (_priority(params[name]), name)
    else:
        key = lambda name: (order.index(name) if name in order else len(order), name)

    pad = max(map(len, params)) + 3
    lines = [title + ":"]
    for name in sorted(params, key=key):
        lines.append("    {0}:{1}{2}".format(name, " " * (pad - len(name)), params[name]))
    return lines


def print_args(args: argparse.Namespace, parser=None, log: Callable = print):
    order = None
    if parser is not None:
        order = [a.dest for g in parser._action_groups for a in g._group_actions]
    for line in format_params(vars(args), "Arguments", order):
        log(line)
    log("")
