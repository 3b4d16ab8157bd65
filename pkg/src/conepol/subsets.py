"""Subsets of {0, ..., n-1} encoded as int bitsets.

Bit i set means element i belongs to the subset.  All set algebra is plain
int arithmetic, which keeps every operation O(1) at desk scale.  Ground
sets are capped at 64 elements.
"""

from .errors import InvalidParams

MAX_GROUND = 64


def from_elements(elements):
    s = 0
    for e in elements:
        e = int(e)
        if e < 0 or e >= MAX_GROUND:
            raise InvalidParams(f"element {e} outside 0..{MAX_GROUND - 1}")
        s |= 1 << e
    return s


def elements(s):
    return [i for i in range(s.bit_length()) if (s >> i) & 1]


def size(s):
    return s.bit_count()


def is_subset(a, b):
    return a & ~b == 0


def is_proper_subset(a, b):
    return a != b and a & ~b == 0


def comparable(a, b):
    return a & ~b == 0 or b & ~a == 0


def sort_key(s):
    """Canonical order: cardinality first, then lexicographic element lists."""
    return (s.bit_count(), tuple(elements(s)))


def submasks(mask):
    """All subsets of `mask`, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def strict_between(K, L):
    """All S with K < S < L (strict inclusions), in canonical order."""
    diff = L & ~K
    out = [K | t for t in submasks(diff) if t not in (0, diff)]
    out.sort(key=sort_key)
    return out


def format_elements(s):
    return ",".join(str(i) for i in elements(s))


def parse_elements(text):
    text = text.strip()
    if text in ("", "empty"):
        return 0
    return from_elements(int(part) for part in text.split(","))
