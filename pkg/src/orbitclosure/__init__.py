"""Orbit-closure relations of group actions on finite and symbolic spaces."""

from orbitclosure.checkers import analyze, theorem_battery
from orbitclosure.finspace import FinSpace, build_space, closure, interior, separation_profile
from orbitclosure.relation import Relation, hat, product_closure, prolongation

__all__ = [
    "FinSpace",
    "Relation",
    "analyze",
    "build_space",
    "closure",
    "hat",
    "interior",
    "product_closure",
    "prolongation",
    "separation_profile",
    "theorem_battery",
]
