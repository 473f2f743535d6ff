"""Registry of the concrete carriers.

``get("s3")`` builds the parametric ``S_3``; the other ids are fixed.
"""

from __future__ import annotations

import re
from functools import lru_cache

from ..core import Semigroup
from ..errors import UsageError
from .product import ProductFiniteByRay
from .scalar import SN, Interval01Inf, OpenInterval12
from .seqcube import SeqCube
from .uhf import AlgebraicProduct, UhfRay

# the entries of the full report, in report order
ENTRY_IDS = ("s1", "open12", "interval01", "product_ray", "seqcube", "uhf", "alg_product")

_FIXED = {
    cls.id: cls
    for cls in (Interval01Inf, OpenInterval12, ProductFiniteByRay, SeqCube, UhfRay, AlgebraicProduct)
}
_SN = re.compile(r"s([1-9][0-9]{0,2})$")


@lru_cache(maxsize=None)
def get(entry_id: str) -> Semigroup:
    if entry_id in _FIXED:
        return _FIXED[entry_id]()
    m = _SN.match(entry_id)
    if m:
        return SN(int(m.group(1)))
    raise UsageError(f"unknown catalog entry {entry_id!r}; known: {', '.join(ENTRY_IDS)} (and s<n>)")


def all_entries() -> list[Semigroup]:
    return [get(e) for e in ENTRY_IDS]


__all__ = [
    "ENTRY_IDS", "get", "all_entries", "SN", "Interval01Inf", "OpenInterval12",
    "ProductFiniteByRay", "SeqCube", "UhfRay", "AlgebraicProduct",
]
