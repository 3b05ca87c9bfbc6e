"""Executable models of effect interfaces, their algebraic laws, and a law checker."""

from .array import ArrayModel, ArrayStore, aswap, iqsort, ipartl, plus_array, write_list
from .core import IDENTITY, LIST, NONE, OPTION, TT, Fn, Functor, Monad, Some
from .errors import (
    EffectLawsError,
    FuelExhausted,
    SizeCertificateViolation,
    UnknownCheck,
    UnknownDemo,
    UnknownSuite,
    UnsupportedLaw,
    WitnessMismatch,
)
from .laws import CheckConfig, LawId, LawReport, check_law, check_law_suite
from .nondet import POWERSET, OutcomeSet, qperm, refines, slowsort
from .probability import DIST, Dist, Prob, choice, dirac, uniform
from .suites import SUITES, run_suite
from .transformers import STATE, MonadMorphism, StateT, check_monad_morphism, fastprod, lift_s
from .typed_store import TYPED_STORE, Loc, TypedStore, TypedStoreModel, cycle, rtl

__all__ = [name for name in dir() if not name.startswith("_")]
