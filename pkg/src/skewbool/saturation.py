"""Generic worklist saturation: close a seed set under binary operations.

Used directly by the independent set-based models; the orthosum module has a
faster packed-key equivalent in :mod:`skewbool.kernels`.
"""

from __future__ import annotations

from .errors import CapExceeded

__all__ = ["saturate"]


def saturate(seeds, ops, *, cap: int | None = None) -> set:
    """Smallest superset of ``seeds`` closed under every ``op(x, y)``.

    Scans the growing element list, combining each new element with all earlier
    ones in both argument orders; elements must be hashable.
    """
    elems = []
    seen = set()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            elems.append(s)
    i = 0
    while i < len(elems):
        x = elems[i]
        for j in range(i + 1):
            y = elems[j]
            for op in ops:
                for r in (op(x, y), op(y, x)):
                    if r not in seen:
                        if cap is not None and len(seen) >= cap:
                            raise CapExceeded(f"saturation exceeded cap of {cap} elements")
                        seen.add(r)
                        elems.append(r)
        i += 1
    return seen
