"""Finite orthocomplemented difference structures and eventually periodic
set families.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._odplab import (  # noqa: F401
    A1,
    A2,
    A3,
    N,
    BudgetExceeded,
    CosetFamily,
    EPSet,
    Instance,
    StructuralError,
    corpus_instance,
    corpus_names,
    even_sets,
    parse,
    powerset,
    product,
    r_family,
    t_family,
)

__all__ = [
    "A1",
    "A2",
    "A3",
    "N",
    "BudgetExceeded",
    "CosetFamily",
    "EPSet",
    "Instance",
    "StructuralError",
    "corpus_instance",
    "corpus_names",
    "even_sets",
    "parse",
    "powerset",
    "product",
    "r_family",
    "t_family",
]
