"""Sparse Laurent polynomials in ``v`` with arbitrary-precision integer coefficients."""

__all__ = ["LaurentPolynomial", "bar_symmetric_part", "quantum_integer"]


class LaurentPolynomial:
    """Immutable map ``exponent -> coefficient``; zero coefficients are never stored.

    >>> v = LaurentPolynomial.v()
    >>> str((v + 1) * (v - 1))
    'v^2 - 1'
    >>> (v + v ** -1).bar() == v + v ** -1
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            clean = {}
        elif isinstance(terms, LaurentPolynomial):
            clean = terms._terms
        elif isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            items = terms.items() if hasattr(terms, "items") else terms
            clean = {}
            for k, c in items:
                if isinstance(k, bool) or not isinstance(k, int):
                    raise TypeError(f"exponents must be integers, got {k!r}")
                if isinstance(c, bool) or not isinstance(c, int):
                    raise TypeError(f"coefficients must be integers, got {c!r}")
                if c:
                    clean[k] = clean.get(k, 0) + c
            clean = {k: c for k, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # terms must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coefficient=1, exponent=0):
        return cls._wrap({exponent: coefficient} if coefficient else {})

    @classmethod
    def v(cls):
        return cls._wrap({1: 1})

    # accessors

    def terms(self):
        """Sorted ``(exponent, coefficient)`` pairs."""
        return sorted(self._terms.items())

    def coefficient(self, k):
        return self._terms.get(k, 0)

    def exponents(self):
        return sorted(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def min_degree(self):
        return min(self._terms) if self._terms else None

    def max_degree(self):
        return max(self._terms) if self._terms else None

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPolynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPolynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPolynomial._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial._wrap({k * n: 1 if n % 2 == 0 else c})
        result = LaurentPolynomial(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by ``v**k``."""
        return LaurentPolynomial._wrap({a + k: c for a, c in self._terms.items()})

    # structure

    def bar(self):
        """The involution ``v -> v^-1``."""
        return LaurentPolynomial._wrap({-k: c for k, c in self._terms.items()})

    def is_bar_invariant(self):
        return all(self._terms.get(-k) == c for k, c in self._terms.items())

    def in_v_zv(self):
        """True if every exponent is strictly positive (membership in ``vZ[v]``)."""
        return all(k > 0 for k in self._terms)

    def evaluate(self, x):
        """Value at ``v = x``; use a Fraction for exact values at non-units."""
        return sum(c * x ** k for k, c in self._terms.items())

    def at_one(self):
        return sum(self._terms.values())

    # comparison / hashing

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({dict(self.terms())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for k, c in sorted(self._terms.items(), reverse=True):
            if k == 0:
                body = str(abs(c))
            else:
                mono = "v" if k == 1 else f"v^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def bar_symmetric_part(c):
    """The bar-invariant ``a`` with ``c - a`` in ``vZ[v]``.

    ``a = c_0 + sum_{k>0} c_{-k} (v^k + v^-k)``; zero exactly when ``c`` already
    lies in ``vZ[v]``.
    """
    c = LaurentPolynomial(c)
    out = {}
    for k, x in c._terms.items():
        if k == 0:
            out[0] = x
        elif k < 0:
            out[k] = x
            out[-k] = x
    return LaurentPolynomial._wrap(out)


def quantum_integer(n):
    """``[n]_v = v^(n-1) + v^(n-3) + ... + v^(1-n)``."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPolynomial._wrap({n - 1 - 2 * k: 1 for k in range(n)})
