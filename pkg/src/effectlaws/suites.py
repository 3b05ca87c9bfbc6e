"""Named law suites: which laws run against which stock models."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from . import models
from .core import IDENTITY, OPTION
from .errors import UnknownSuite
from .laws import CheckConfig, LawReport, check_law_suite
from .nondet import POWERSET

__all__ = ["SUITES", "MODELS", "run_suite", "suite_names"]

FUNCTOR = ["functor.id", "functor.comp"]
MONAD = [
    "bind.left_neutral",
    "bind.right_neutral",
    "bind.assoc",
    "bind.join",
    "join.left_unit",
    "join.right_unit",
    "join.assoc",
]
NONDET = ["fail.left_zero", "alt.assoc", "alt.bindDl", "nondet.altfailm", "nondet.altmfail"]
PLUS = NONDET + ["fail.right_zero", "alt.bindDr", "altci.idempotent", "altci.comm"]
EXCEPT = ["fail.left_zero", "except.catchmfail", "except.catchfailm", "except.catchA", "except.catchret"]
STATE = ["state.putput", "state.putget", "state.getputskip", "state.getget"]
ARRAY = [
    "array.aputput",
    "array.aputget",
    "array.agetputskip",
    "array.agetget",
    "array.agetC",
    "array.aputC",
    "array.aputgetC",
]
MORPHISM = ["morphism.ret", "morphism.bind", "morphism.naturality"]
CONVEX = ["convex.choice1", "convex.choiceC", "convex.choicemm", "convex.choiceA"]
STORE = [
    "store.cputput",
    "store.cputget",
    "store.cgetget",
    "store.cgetC",
    "store.cgetputskip",
    "store.cputC",
    "store.cputgetC",
    "store.cgetputC",
    "store.cnewget",
    "store.cnewput",
    "store.cnewchk",
    "store.cchknewC",
    "store.cchknewE",
    "store.cchkputC",
    "store.cgetputchk",
]

MODELS: dict[str, Callable] = {
    "identity": models.identity_model,
    "list": models.list_model,
    "powerset": models.powerset_model,
    "exception": models.exception_model,
    "state": models.state_model,
    "state[option]": lambda: models.state_model(OPTION),
    "state[powerset]": lambda: models.state_model(POWERSET),
    "array": models.array_model,
    "plus-array": models.plus_array_model,
    "dist": models.dist_model,
    "typed-store": models.typed_store_model,
    "liftS[identity]": lambda: models.lift_model(IDENTITY),
    "liftS[option]": lambda: models.lift_model(OPTION),
    "liftS[powerset]": lambda: models.lift_model(POWERSET),
}

# suite name -> [(laws, model name)]
SUITES: dict[str, list] = {
    "functor": [(FUNCTOR, m) for m in ("identity", "list", "powerset", "exception", "state", "dist")],
    "monad": [
        (MONAD, m)
        for m in (
            "identity",
            "powerset",
            "exception",
            "state",
            "state[option]",
            "state[powerset]",
            "array",
            "plus-array",
            "dist",
            "typed-store",
        )
    ],
    "fail": [(["fail.left_zero"], m) for m in ("powerset", "exception", "state[option]", "plus-array", "typed-store")],
    "alt": [(["alt.assoc", "alt.bindDl"], m) for m in ("powerset", "state[powerset]", "plus-array")],
    "nondet": [(NONDET, m) for m in ("powerset", "state[powerset]", "plus-array")],
    "plus": [(PLUS, "powerset")],
    "except": [(EXCEPT, "exception")],
    "state": [(STATE, m) for m in ("state", "state[option]", "state[powerset]")],
    "array": [(ARRAY, "array")],
    "plus-array": [(PLUS + ARRAY, "plus-array")],
    "morphism": [(MORPHISM, m) for m in ("liftS[identity]", "liftS[option]", "liftS[powerset]")],
    "convex": [(CONVEX, "dist")],
    "prob": [(MONAD[:3] + CONVEX + ["prob.bindDl"], "dist")],
    "typed-store": [(STORE, "typed-store")],
}
SUITES["all"] = [entry for name in list(SUITES) for entry in SUITES[name]]


@lru_cache(maxsize=None)
def model(name: str):
    return MODELS[name]()


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, cfg: CheckConfig = CheckConfig(), workers: int = 1) -> list[LawReport]:
    """Run every (law, model) pair of a suite once, in declaration order."""
    try:
        entries = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    reports, seen = [], set()
    for laws, model_name in entries:
        fresh = [lw for lw in laws if (lw, model_name) not in seen]
        seen.update((lw, model_name) for lw in fresh)
        if fresh:
            reports += check_law_suite(fresh, model(model_name), cfg, workers)
    return reports
