"""Partitions, Young diagrams, hook lengths and the predicates built on them.

Nodes are 1-indexed ``(row, column)`` pairs in the English convention, so
row 1 is the top row of the diagram.
"""

import itertools
import re

from specht.errors import DomainError

__all__ = [
    "Partition",
    "parse_partition",
    "format_partition",
    "conjugate",
    "nodes",
    "hook_length",
    "hook_lengths",
    "dominates",
    "is_e_regular",
    "is_doubly_singular",
    "is_e_core",
    "is_e_jm",
    "jm_violation",
    "is_broken",
    "broken_witness",
    "last_repeat_row",
    "enumerate_in_box",
    "enumerate_unbroken_doubly_singular_cores",
    "is_prime",
    "descending",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeroes are dropped; anything else that is not weakly
    decreasing and non-negative is rejected rather than sorted.

    >>> Partition((3, 1, 0))
    Partition(3, 1)
    >>> Partition((3, 1)).conjugate()
    Partition(2, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = list(parts)
        for x in parts:
            if isinstance(x, bool) or not isinstance(x, int):
                raise DomainError(f"partition parts must be integers, got {x!r}")
            if x < 0:
                raise DomainError(f"partition parts must be non-negative, got {x}")
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be weakly decreasing: {tuple(parts)}")
        if 0 in parts:
            raise DomainError(f"zero part before a positive part: {tuple(parts)}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        # Skips validation; callers guarantee a valid part sequence.
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        return parse_partition(text)

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """The ``i``-th part (1-indexed), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def __repr__(self):
        return "Partition(" + ", ".join(map(str, self)) + ")"

    def __str__(self):
        return format_partition(self)


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text):
    """Parse ``"6,6,5,4"`` or ``"6^2,5,4"``; the empty string or ``"()"`` is the empty partition."""
    if isinstance(text, Partition):
        return text
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if s in ("", "0", "∅"):
        return Partition(())
    parts = []
    for token in s.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise DomainError(f"cannot parse partition token {token!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count < 1 or value < 1:
            raise DomainError(f"parts and multiplicities must be positive in {text!r}")
        parts.extend([value] * count)
    return Partition(parts)


def format_partition(la):
    """Exponent notation, e.g. ``6^2,5,4``; the empty partition is ``()``."""
    if not la:
        return "()"
    out = []
    for value, group in itertools.groupby(la):
        k = len(list(group))
        out.append(f"{value}^{k}" if k > 1 else str(value))
    return ",".join(out)


def conjugate(la):
    la = Partition(la)
    if not la:
        return la
    cols = [0] * la[0]
    for part in la:
        for j in range(part):
            cols[j] += 1
    return Partition._trusted(cols)


def nodes(la):
    """All nodes of the Young diagram, row by row."""
    return [(i, j) for i, part in enumerate(la, 1) for j in range(1, part + 1)]


def hook_length(la, node, conj=None):
    la = Partition(la)
    i, j = node
    if not (1 <= i <= len(la) and 1 <= j <= la[i - 1]):
        raise DomainError(f"node {node} is not in the diagram of {format_partition(la)}")
    if conj is None:
        conj = conjugate(la)
    return 1 + la[i - 1] - j + conj[j - 1] - i


def hook_lengths(la):
    """Map every node of ``la`` to its hook length."""
    la = Partition(la)
    conj = conjugate(la)
    return {
        (i, j): 1 + part - j + conj[j - 1] - i
        for i, part in enumerate(la, 1)
        for j in range(1, part + 1)
    }


def dominates(mu, la):
    """True if ``mu`` dominates ``la`` (partial sums of ``mu`` are never smaller)."""
    if sum(mu) != sum(la):
        return False
    s = t = 0
    for k in range(max(len(mu), len(la))):
        s += mu[k] if k < len(mu) else 0
        t += la[k] if k < len(la) else 0
        if s < t:
            return False
    return True


def _check_e(e):
    if isinstance(e, bool) or not isinstance(e, int) or e < 2:
        raise DomainError(f"e must be an integer >= 2, got {e!r}")


def is_e_regular(la, e):
    _check_e(e)
    la = Partition(la)
    return all(la[k] != la[k + e - 1] for k in range(len(la) - e + 1))


def is_doubly_singular(la):
    la = Partition(la)
    return not is_e_regular(la, 2) and not is_e_regular(conjugate(la), 2)


def is_e_core(la, e):
    _check_e(e)
    return all(h % e for h in hook_lengths(la).values())


def jm_violation(la, e):
    """First node (row-major) breaking the e-JM condition, or None.

    A node whose hook length is divisible by ``e`` is fine when every hook
    in its row, or every hook in its column, is divisible by ``e``.
    """
    _check_e(e)
    la = Partition(la)
    hooks = hook_lengths(la)
    conj = conjugate(la)
    row_ok = {}
    col_ok = {}
    for (i, j), h in hooks.items():
        if h % e:
            continue
        if i not in row_ok:
            row_ok[i] = all(hooks[i, k] % e == 0 for k in range(1, la[i - 1] + 1))
        if row_ok[i]:
            continue
        if j not in col_ok:
            col_ok[j] = all(hooks[k, j] % e == 0 for k in range(1, conj[j - 1] + 1))
        if not col_ok[j]:
            return (i, j)
    return None


def is_e_jm(la, e):
    return jm_violation(la, e) is None


def broken_witness(la):
    """Smallest pair ``(c, d)`` with ``1 < c < d``, ``la_{c-1} - la_c > 1`` and ``la_{d-1} = la_d > 0``."""
    la = Partition(la)
    r = len(la)
    for c in range(2, r + 2):
        if la.part(c - 1) - la.part(c) > 1:
            for d in range(c + 1, r + 1):
                if la[d - 2] == la[d - 1]:
                    return (c, d)
    return None


def is_broken(la):
    return broken_witness(la) is not None


def last_repeat_row(la):
    la = Partition(la)
    for a in range(len(la), 1, -1):
        if la[a - 2] == la[a - 1]:
            return a
    return None


def enumerate_in_box(rows, cols, _cap=None):
    """Yield every partition fitting in a ``rows`` x ``cols`` box exactly once.

    Order is descending lexicographic, so the empty partition comes last.
    """
    if rows < 1 or cols < 1:
        raise DomainError("box dimensions must be positive")
    yield from _box(rows, cols, ())


def _box(rows, cap, prefix):
    if rows:
        for first in range(cap, 0, -1):
            yield from _box(rows - 1, first, prefix + (first,))
    yield Partition._trusted(prefix)


def is_prime(p):
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def descending(partitions):
    """Sort into the global report order (descending lexicographic)."""
    return sorted(partitions, reverse=True)


def _unbroken_cores(e, rows, cols):
    """Unbroken e-cores inside the box, found by prepending rows from the bottom.

    Deleting the first row of an e-core (or of an unbroken partition) leaves
    an e-core (an unbroken partition), so pruning at each step loses nothing.
    """
    found = []
    # stack entries: (parts, conjugate as list, has_repeat)
    stack = [((), [], False)]
    while stack:
        parts, conj, has_repeat = stack.pop()
        found.append(parts)
        if len(parts) == rows:
            continue
        low = parts[0] if parts else 1
        for f in range(low, cols + 1):
            if parts and f - parts[0] > 1 and has_repeat:
                continue
            w = len(conj)
            if any((f - j + 1 + (conj[j - 1] if j <= w else 0)) % e == 0 for j in range(1, f + 1)):
                continue
            new_conj = [c + 1 for c in conj] + [1] * (f - w)
            stack.append(((f,) + parts, new_conj, has_repeat or bool(parts and parts[0] == f)))
    return found


def enumerate_unbroken_doubly_singular_cores(p, rows=None, cols=None):
    """All unbroken doubly-singular ``2p``-cores, in descending lexicographic order.

    Every such partition fits in the ``(4p-6) x (4p-6)`` box; ``rows`` and
    ``cols`` widen the search for sanity checks.
    """
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p!r}")
    bound = 4 * p - 6
    rows = bound if rows is None else rows
    cols = bound if cols is None else cols
    if rows < 1 or cols < 1:
        return []
    out = []
    for parts in _unbroken_cores(2 * p, rows, cols):
        la = Partition._trusted(parts)
        if la and is_doubly_singular(la):
            out.append(la)
    return descending(out)
