"""Instantiate laws against models and report the outcome.

A :class:`Law` names its parameters and the *kind* of each one (``"comp"``,
``"kont"``, ``"index"`` ...).  A :class:`Model` pairs a monad with one
:class:`Domain` per kind it can generate.  Checking enumerates the first
``exhaustive_bound`` items of every domain, then draws ``random_trials``
further instances from a generator seeded by ``(seed, law, model)``; both
sides are compared by the monad's denotation.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence, Union

from ..core import Functor, render
from ..errors import UnsupportedLaw

__all__ = [
    "CheckConfig",
    "LawId",
    "Law",
    "LAWS",
    "law",
    "get_law",
    "Domain",
    "Model",
    "LawReport",
    "check_law",
    "check_law_suite",
    "check_functor_laws",
    "check_monad_laws",
    "evaluate",
    "reproduce",
    "render_text",
    "render_json",
]


@dataclass(frozen=True)
class CheckConfig:
    seed: int = 0
    exhaustive_bound: int = 4
    random_trials: int = 200

    def __post_init__(self):
        if self.exhaustive_bound < 0 or self.random_trials < 0:
            raise ValueError("bounds must be non-negative")


@dataclass(frozen=True)
class LawId:
    name: str
    source: str


@dataclass(frozen=True)
class Law:
    id: LawId
    requires: tuple
    params: tuple  # (parameter name, domain kind) pairs
    body: Callable[..., tuple]
    condition: Optional[Callable[..., bool]] = None

    @property
    def name(self) -> str:
        return self.id.name


LAWS: dict[str, Law] = {}


def law(name: str, source: str, requires: Sequence[str] = (), condition=None, **params: str):
    """Register ``body(M, **params) -> (lhs, rhs)`` as a law."""

    def register(body):
        if name in LAWS:
            raise ValueError(f"duplicate law {name}")
        LAWS[name] = Law(LawId(name, source), tuple(requires), tuple(params.items()), body, condition)
        return body

    return register


def get_law(x: Union[str, LawId, Law]) -> Law:
    if isinstance(x, Law):
        return x
    name = x.name if isinstance(x, LawId) else x
    try:
        return LAWS[name]
    except KeyError:
        raise UnsupportedLaw(f"no law named {name!r}") from None


class Domain:
    """Finite enumeration of a parameter kind plus an optional random generator."""

    def __init__(self, items: Iterable, sampler: Optional[Callable[[random.Random], Any]] = None):
        self.items = list(items)
        self.sampler = sampler
        if not self.items and sampler is None:
            raise ValueError("empty domain without a sampler")

    def enumerate(self, bound: int) -> list:
        return self.items[:bound]

    def sample(self, rng: random.Random):
        if self.sampler is not None:
            return self.sampler(rng)
        return self.items[rng.randrange(len(self.items))]


@dataclass
class Model:
    name: str
    monad: Functor
    domains: dict = field(default_factory=dict)

    def domain(self, kind: str) -> Domain:
        try:
            return self.domains[kind]
        except KeyError:
            raise UnsupportedLaw(f"model {self.name} cannot generate {kind!r} parameters") from None


@dataclass
class LawReport:
    law: LawId
    model: str
    instances_checked: int
    skipped: int
    status: str
    counterexample: Optional[dict] = None
    instance: Optional[dict] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(self.status)
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {
            "law": self.law.name,
            "source": self.law.source,
            "model": self.model,
            "instances": self.instances_checked,
            "skipped": self.skipped,
            "status": self.status,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d

    def to_line(self) -> str:
        line = (
            f"{self.status.upper():4} {self.law.name} [{self.model}] "
            f"instances={self.instances_checked} skipped={self.skipped} :: {self.law.source}"
        )
        if self.counterexample:
            cx = self.counterexample
            inputs = ", ".join(f"{k}={v}" for k, v in cx["inputs"].items())
            line += f"\n     inputs: {inputs}\n     lhs:    {cx['lhs']}\n     rhs:    {cx['rhs']}"
        return line


def evaluate(law: Law, M: Functor, params: dict) -> tuple:
    lhs, rhs = law.body(M, **params)
    return M.denote(lhs), M.denote(rhs)


def _instances(law: Law, model: Model, cfg: CheckConfig):
    names = [p for p, _ in law.params]
    domains = [model.domain(kind) for _, kind in law.params]
    for combo in itertools.product(*(d.enumerate(cfg.exhaustive_bound) for d in domains)):
        yield dict(zip(names, combo))
    if not names:
        return
    rng = random.Random(f"{cfg.seed}/{law.name}/{model.name}")
    for _ in range(cfg.random_trials):
        yield {n: d.sample(rng) for n, d in zip(names, domains)}


def check_law(x: Union[str, LawId, Law], model: Model, cfg: CheckConfig = CheckConfig()) -> LawReport:
    lw = get_law(x)
    M = model.monad
    missing = [op for op in lw.requires if not M.supports(op)]
    if missing:
        raise UnsupportedLaw(f"{lw.name} needs {', '.join(missing)}; model {model.name} lacks it")
    checked = skipped = 0
    for params in _instances(lw, model, cfg):
        if lw.condition is not None and not lw.condition(M, **params):
            skipped += 1
            continue
        checked += 1
        dl, dr = evaluate(lw, M, params)
        if dl != dr:
            lhs, rhs = M.explain(dl, dr)
            cx = {"inputs": {k: render(v) for k, v in params.items()}, "lhs": lhs, "rhs": rhs}
            return LawReport(lw.id, model.name, checked, skipped, "fail", cx, params)
    return LawReport(lw.id, model.name, checked, skipped, "pass")


def check_law_suite(
    suite: Iterable[Union[str, LawId, Law]],
    model: Model,
    cfg: CheckConfig = CheckConfig(),
    workers: int = 1,
) -> list[LawReport]:
    """One report per law, in suite order.

    Every law is resolved and checked for applicability before any of them
    runs, so a wiring error surfaces as :class:`UnsupportedLaw` up front.
    """
    laws = [get_law(x) for x in suite]
    for lw in laws:
        missing = [op for op in lw.requires if not model.monad.supports(op)]
        if missing:
            raise UnsupportedLaw(f"{lw.name} needs {', '.join(missing)}; model {model.name} lacks it")
        for _, kind in lw.params:
            model.domain(kind)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda lw: check_law(lw, model, cfg), laws))
    return [check_law(lw, model, cfg) for lw in laws]


def check_functor_laws(model: Model, cfg: CheckConfig = CheckConfig()) -> list[LawReport]:
    return check_law_suite(["functor.id", "functor.comp"], model, cfg)


def check_monad_laws(model: Model, cfg: CheckConfig = CheckConfig()) -> list[LawReport]:
    return check_law_suite(["bind.left_neutral", "bind.right_neutral", "bind.assoc"], model, cfg)


def reproduce(report: LawReport, model: Model) -> tuple:
    """Re-evaluate a failing report's instance; returns both denotations."""
    if report.instance is None:
        raise ValueError("report carries no instance")
    return evaluate(get_law(report.law), model.monad, report.instance)


def render_text(reports: Iterable[LawReport]) -> str:
    reports = list(reports)
    failed = sum(not r.passed for r in reports)
    lines = [r.to_line() for r in reports]
    lines.append(f"{len(reports) - failed}/{len(reports)} laws passed")
    return "\n".join(lines) + "\n"


def render_json(reports: Iterable[LawReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True, ensure_ascii=False) + "\n"
