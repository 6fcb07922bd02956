"""Python front end for the hopfact workbench.

Every function returns the report as a dict; ``status`` is one of
pass, fail, error or counterexample.
"""

import json

from ._core import HopfactError, Workspace, commands, subspace_count, suites

__all__ = [
    "HopfactError",
    "Workspace",
    "commands",
    "suites",
    "subspace_count",
    "run",
    "verify",
    "core",
    "core_via_psi",
    "radical",
    "spectrum",
    "strata",
    "strat_bijection",
    "dotinv",
    "lie_core",
    "series_phi",
    "charp_demo",
    "suite",
]


def _ws(workspace):
    return workspace if workspace is not None else Workspace.builtin()


def run(command, workspace=None, timings=False, **options):
    """Run a CLI command and return its report as a dict.

    Keyword options mirror the CLI flags (action, ideal, algebra, lie, p, ...).
    """
    opts = {k: str(v) for k, v in options.items() if v is not None}
    text, _ = _ws(workspace).run(command, opts, timings)
    return json.loads(text)


def verify(workspace=None, **selection):
    return run("verify", workspace, **selection)


def core(action, ideal, workspace=None):
    return run("core", workspace, action=action, ideal=_ideal(ideal))


def core_via_psi(action, ideal, workspace=None):
    return run("core-psi", workspace, action=action, ideal=_ideal(ideal))


def radical(algebra, ideal=None, workspace=None):
    return run("radical", workspace, algebra=algebra, ideal=_ideal(ideal) if ideal is not None else None)


def spectrum(algebra, workspace=None):
    return run("spectrum", workspace, algebra=algebra)


def strata(action, workspace=None):
    return run("strata", workspace, action=action)


def strat_bijection(action, ideal=None, workspace=None):
    return run("strat-bijection", workspace, action=action, ideal=_ideal(ideal) if ideal is not None else None)


def dotinv(action, workspace=None):
    return run("dotinv", workspace, action=action)


def lie_core(lie, ideal, workspace=None):
    return run("lie-core", workspace, lie=lie, ideal=_ideal(ideal))


def series_phi(values, values2=None, truncation=6, p=0):
    fmt = lambda vs: ",".join(str(v) for v in vs)
    return run("series-phi", values=fmt(values), values2=fmt(values2) if values2 else None,
               truncation=truncation, p=p)


def charp_demo(p):
    return run("charp-demo", p=p)


def suite(name, workspace=None):
    return run("suite", workspace, target=name)


def _ideal(ideal):
    """Ideal names pass through; generator lists become inline JSON."""
    if isinstance(ideal, str):
        return ideal
    return json.dumps([[str(c) for c in g] for g in ideal])
