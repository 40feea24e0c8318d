"""Python access to the hfperiodic core.

Inputs are dicts ``{"base_genus": g, "fibers": [[p, q], ...]}``; results are
the same JSON documents the ``hfp`` command line tool prints.
"""

import json

from . import _core

__version__ = _core.version.split()[-1]


class HfpError(ValueError):
    """A domain error raised by the core, with its error code."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _call(fn, input, *args, **kwargs):
    text = json.dumps(input) if not isinstance(input, str) else input
    try:
        return fn(text, *args, **kwargs)
    except _core.HfpError as exc:
        code, _, message = str(exc).partition("|")
        raise HfpError(code, message) from None


def _doc(fn, input, *args, **kwargs):
    return json.loads(_call(fn, input, *args, **kwargs))


def info(input):
    return _doc(_core.info, input)


def spinc(input, label):
    return _doc(_core.spinc, input, label)


def classes_at_level(input, level):
    return _doc(_core.classes_at_level, input, level)


def profile(input, label):
    return _doc(_core.profile, input, label)


def wells(input, label):
    return _doc(_core.wells, input, label)


def hf(input, label):
    return _doc(_core.hf, input, label)


def level(input, epsilon):
    return _doc(_core.level, input, epsilon)


def oracle(input, label, periods=None, delta=None):
    return _doc(_core.oracle, input, label, periods, delta)


def count_N(input, D, E):
    return _call(_core.count_N, input, D, E)


def lefschetz(input, power=1):
    return _call(_core.lefschetz, input, power)


def plot(input, label, lo="0", hi="1", format="svg"):
    return _call(_core.plot, input, label, str(lo), str(hi), format)


def regress():
    return json.loads(_core.regress())
