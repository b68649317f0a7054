"""The level-1 Fock space and the lowering operators ``f_i`` at an ``e``-th root of unity.

Conventions (none of them come for free; the fixture suite pins them):

* the residue of node ``(i, j)`` is ``(j - i) mod e``;
* ``f_i^{(a)}|la>`` sums ``v^N |mu>`` over the ways of adding ``a`` addable
  ``i``-nodes, where for each added node ``A``
  ``N += #{addable i-nodes of la above A, not added} - #{removable i-nodes of la above A}``
  and "above" means in an earlier row;
* the ladder of node ``(i, j)`` is ``i + (e - 1)(j - 1)``.

Internally vectors are plain ``dict[tuple, dict[int, int]]`` maps so that the
inner loops stay cheap; :class:`FockVector` wraps them at the API boundary.
"""

from itertools import combinations

from specht.errors import DomainError
from specht.laurent import LaurentPolynomial
from specht.partitions import Partition, format_partition, is_e_regular

__all__ = [
    "FockVector",
    "residue",
    "addable_nodes",
    "removable_nodes",
    "apply_divided_power",
    "ladder_sequence",
    "first_approximation",
    "e_core",
    "e_weight",
]


def residue(node, e):
    if e < 2:
        raise DomainError(f"e must be >= 2, got {e}")
    i, j = node
    return (j - i) % e


def addable_nodes(la, i, e):
    """Addable nodes of residue ``i``, top row first."""
    la = Partition(la)
    out = []
    for r in range(len(la) + 1):
        here = la[r] if r < len(la) else 0
        if r == 0 or la[r - 1] > here:
            if (here - r) % e == i % e:
                out.append((r + 1, here + 1))
    return out


def removable_nodes(la, i, e):
    """Removable nodes of residue ``i``, top row first."""
    la = Partition(la)
    out = []
    for r, part in enumerate(la):
        below = la[r + 1] if r + 1 < len(la) else 0
        if part > below and (part - 1 - r) % e == i % e:
            out.append((r + 1, part))
    return out


class FockVector:
    """A finite combination of partitions of one size, with Laurent polynomial coefficients."""

    __slots__ = ("degree", "_terms")

    def __init__(self, terms=None, degree=None):
        raw = {}
        for la, c in (terms or {}).items():
            la = Partition(la)
            c = LaurentPolynomial(c)
            if c:
                raw[la] = c
        sizes = {la.size for la in raw}
        if degree is None:
            if len(sizes) > 1:
                raise DomainError("all partitions in a Fock vector must have the same size")
            degree = sizes.pop() if sizes else 0
        elif any(s != degree for s in sizes):
            raise DomainError(f"all partitions must have size {degree}")
        self.degree = degree
        self._terms = raw

    @classmethod
    def vacuum(cls):
        return cls({Partition(()): 1}, degree=0)

    @classmethod
    def basis(cls, la):
        la = Partition(la)
        return cls({la: 1}, degree=la.size)

    @classmethod
    def _from_raw(cls, raw, degree):
        obj = cls.__new__(cls)
        obj.degree = degree
        obj._terms = {
            Partition._trusted(la): LaurentPolynomial._wrap(dict(poly))
            for la, poly in raw.items()
            if poly
        }
        return obj

    def _raw(self):
        return {tuple(la): dict(c._terms) for la, c in self._terms.items()}

    def coefficient(self, la):
        return self._terms.get(Partition(la), LaurentPolynomial())

    def __getitem__(self, la):
        return self.coefficient(la)

    def support(self):
        """Indexing partitions in descending lexicographic order."""
        return sorted(self._terms, reverse=True)

    def items(self):
        return [(la, self._terms[la]) for la in self.support()]

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.support())

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __add__(self, other):
        if self.degree != other.degree and self._terms and other._terms:
            raise DomainError("cannot add Fock vectors of different degrees")
        out = dict(self._terms)
        for la, c in other._terms.items():
            s = out.get(la, LaurentPolynomial()) + c
            if s:
                out[la] = s
            else:
                out.pop(la, None)
        return FockVector(out, degree=self.degree if self._terms else other.degree)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = LaurentPolynomial(c)
        return FockVector({la: x * c for la, x in self._terms.items()}, degree=self.degree)

    def at_one(self):
        """Coefficients evaluated at ``v = 1``."""
        return {la: c.at_one() for la, c in self.items() if c.at_one()}

    def __repr__(self):
        if not self._terms:
            return "FockVector(0)"
        return " + ".join(f"({c})|{format_partition(la)}>" for la, c in self.items())


def _addable_and_removable(la, i, e):
    """Rows (0-indexed) of addable ``i``-nodes, and for each the count of removable ``i``-nodes above it."""
    rows = []
    rem_above = []
    rem = 0
    n = len(la)
    prev = None
    for r in range(n + 1):
        here = la[r] if r < n else 0
        if (prev is None or prev > here) and (here - r) % e == i:
            rows.append(r)
            rem_above.append(rem)
        if r < n:
            below = la[r + 1] if r + 1 < n else 0
            if here > below and (here - 1 - r) % e == i:
                rem += 1
        prev = here
    return rows, rem_above


def _divided_power_raw(vec, i, a, e, keep=None, positive=False):
    """Apply ``f_i^{(a)}`` to a raw vector; ``keep`` optionally filters result partitions.

    ``positive=True`` promises non-negative input coefficients, so no
    cancellation can occur and the zero-stripping pass is skipped.
    """
    out = {}
    for la, poly in vec.items():
        rows, rem_above = _addable_and_removable(la, i, e)
        m = len(rows)
        if m < a:
            continue
        n = len(la)
        if a == 1:
            moves = []
            for k in range(m):
                r = rows[k]
                mu = la[:r] + (la[r] + 1,) + la[r + 1:] if r < n else la + (1,)
                moves.append((mu, k - rem_above[k]))
        else:
            moves = []
            for chosen in combinations(range(m), a):
                shift = 0
                mu = list(la)
                for t, k in enumerate(chosen):
                    shift += (k - t) - rem_above[k]
                    r = rows[k]
                    if r < n:
                        mu[r] += 1
                    else:
                        mu.append(1)
                moves.append((tuple(mu), shift))
        for mu, shift in moves:
            if keep is not None and not keep(mu):
                continue
            target = out.get(mu)
            if target is None:
                out[mu] = {k + shift: c for k, c in poly.items()} if shift else dict(poly)
            else:
                for k, c in poly.items():
                    s = k + shift
                    target[s] = target.get(s, 0) + c
    if not positive:
        for mu in list(out):
            poly = {k: c for k, c in out[mu].items() if c}
            if poly:
                out[mu] = poly
            else:
                del out[mu]
    return out


def apply_divided_power(x, i, a, e):
    """``f_i^{(a)} x`` for a :class:`FockVector` ``x``."""
    if isinstance(a, bool) or not isinstance(a, int) or a <= 0:
        raise DomainError(f"divided power exponent must be a positive integer, got {a!r}")
    if e < 2:
        raise DomainError(f"e must be >= 2, got {e}")
    raw = _divided_power_raw(x._raw(), i % e, a, e)
    return FockVector._from_raw(raw, x.degree + a)


def ladder_sequence(mu, e):
    """Nodes of ``mu`` grouped by ladder, as ``[(residue, count), ...]`` in increasing ladder order."""
    mu = Partition(mu)
    if e < 2:
        raise DomainError(f"e must be >= 2, got {e}")
    if not is_e_regular(mu, e):
        raise DomainError(f"{format_partition(mu)} is not {e}-regular")
    counts = {}
    for i, part in enumerate(mu, 1):
        for j in range(1, part + 1):
            ell = i + (e - 1) * (j - 1)
            counts[ell] = counts.get(ell, 0) + 1
    return [((1 - ell) % e, counts[ell]) for ell in sorted(counts)]


def _first_approximation_raw(mu, e, keep=None):
    vec = {(): {0: 1}}
    steps = ladder_sequence(mu, e)
    for idx, (r, k) in enumerate(steps):
        vec = _divided_power_raw(vec, r, k, e, keep if idx == len(steps) - 1 else None, positive=True)
    return vec


def first_approximation(mu, e):
    """The ladder monomial applied to the vacuum; its coefficient at ``mu`` is exactly 1."""
    mu = Partition(mu)
    raw = _first_approximation_raw(mu, e)
    if raw.get(tuple(mu)) != {0: 1}:
        raise DomainError(
            f"ladder approximation of {format_partition(mu)} has leading coefficient "
            f"{raw.get(tuple(mu))}; convention error"
        )
    return FockVector._from_raw(raw, mu.size)


def _beta_core(la, e):
    """Remove all e-rim hooks by sliding beta numbers down; returns (core, weight)."""
    n = len(la)
    beta = {la[k] - k + n - 1 for k in range(n)}
    weight = 0
    moved = True
    while moved:
        moved = False
        for b in sorted(beta):
            if b >= e and b - e not in beta:
                beta.remove(b)
                beta.add(b - e)
                weight += 1
                moved = True
                break
    ordered = sorted(beta, reverse=True)
    parts = [b - (n - 1 - k) for k, b in enumerate(ordered)]
    return Partition._trusted(tuple(x for x in parts if x > 0)), weight


def e_core(la, e):
    """The ``e``-core of ``la``: what remains after removing rim hooks of length ``e``."""
    if e < 2:
        raise DomainError(f"e must be >= 2, got {e}")
    return _beta_core(tuple(Partition(la)), e)[0]


def e_weight(la, e):
    return _beta_core(tuple(Partition(la)), e)[1]
