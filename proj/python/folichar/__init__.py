"""Exact characteristic varieties of polynomial foliations."""

import json

from ._folichar import FolicharError, Session, command_names
from ._folichar import run_command as _run_command

__all__ = ["FolicharError", "Report", "Session", "command_names", "run", "run_file"]


class Report(dict):
    """A command report; ``exit_code`` follows the CLI convention."""

    def __init__(self, data, exit_code):
        super().__init__(data)
        self.exit_code = exit_code

    @property
    def ok(self):
        return self.exit_code == 0


def run(text, command, *args, xi="", budget=None, max_deg=2, max_cofactor=1, order="grevlex",
        bernstein=False, prolonged=False, assume_irreducible=False):
    raw, code = _run_command(text, command, [str(a) for a in args], xi, budget, max_deg, max_cofactor,
                             order, bernstein, prolonged, assume_irreducible)
    return Report(json.loads(raw), code)


def run_file(path, command, *args, **options):
    with open(path, encoding="utf-8") as fh:
        return run(fh.read(), command, *args, **options)


def _command_function(name):
    def call(text, *args, **options):
        return run(text, name, *args, **options)

    call.__name__ = name.replace("-", "_")
    call.__doc__ = f"Run the `{name}` command on session text."
    return call


for _name in command_names():
    globals()[_name.replace("-", "_")] = _command_function(_name)
    __all__.append(_name.replace("-", "_"))
del _name
