"""Shared test helpers: cached enumerations, since several sweeps walk the
same cover tables."""

from functools import lru_cache

from cyclocover.covers import enumerate_covers


@lru_cache(maxsize=1)
def _genus_five_rows():
    return tuple(enumerate_covers(5, min_genus=2))


@lru_cache(maxsize=None)
def covers_up_to(max_genus, n=None, min_genus=2):
    if max_genus <= 5:
        return tuple(
            (b, g)
            for b, g in _genus_five_rows()
            if min_genus <= g <= max_genus
            and (n is None or b.num_punctures == n)
        )
    return tuple(enumerate_covers(max_genus, n=n, min_genus=min_genus))
