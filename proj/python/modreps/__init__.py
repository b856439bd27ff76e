"""Exact representations of mapping class groups; JSON in, JSON out."""

import json
from fractions import Fraction

from . import _core
from ._core import ModrepsError

__all__ = [
    "ModrepsError",
    "model",
    "verify",
    "classify",
    "cohomology",
    "johnson_check",
    "connecting_map",
    "catalog",
    "matrix",
]


def _text(rep):
    return rep if isinstance(rep, str) else json.dumps(rep)


def model(genus, kind="symplectic", pad=0):
    return json.loads(_core.model(genus, kind, pad))


def verify(rep):
    return json.loads(_core.verify(_text(rep)))


def classify(rep):
    return json.loads(_core.classify(_text(rep)))


def cohomology(rep):
    return json.loads(_core.cohomology(_text(rep)))


def johnson_check(rep, chain=("a1", "a2", "a3", "a4")):
    return json.loads(_core.johnson_check(_text(rep), list(chain)))


def connecting_map(genus, lam):
    return Fraction(_core.connecting_map(genus, str(Fraction(lam))))


def catalog(genus):
    return json.loads(_core.catalog(genus))


def matrix(rows):
    """Rational matrix entries from their JSON string form."""
    return [[Fraction(x) for x in row] for row in rows]
