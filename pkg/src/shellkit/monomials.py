"""Monomials with capped exponents, reverse-lex order, multicomplexes.

A monomial is a plain tuple of non-negative exponents ``(c_1, ..., c_k)``.
A cap vector is a tuple whose entries are non-negative ints or
:data:`UNBOUNDED`.  Compression follows Clements and Lindstrom: within each
degree, keep the reverse-lex initial segment of the requested size.
"""

from __future__ import annotations

import functools
from collections import Counter
from typing import Iterable, Sequence

Monomial = tuple  # tuple[int, ...]


@functools.total_ordering
class _Unbounded:
    """Cap value larger than every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("shellkit.UNBOUNDED")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()


class UnrealizableError(ValueError):
    """An F-vector that no multicomplex within the caps can have.

    ``degree`` is the first degree at which the failure shows up.
    """

    def __init__(self, message, degree):
        super().__init__(message)
        self.degree = degree


def as_caps(caps: Iterable) -> tuple:
    """Normalise a cap sequence; ``None`` and ``UNBOUNDED`` both mean no cap."""
    out = []
    for a in caps:
        if a is None or a is UNBOUNDED:
            out.append(UNBOUNDED)
        elif isinstance(a, int) and not isinstance(a, bool) and a >= 0:
            out.append(a)
        else:
            raise ValueError(f"invalid cap {a!r}")
    return tuple(out)


def check_caps_sorted(caps: Sequence) -> None:
    for i in range(len(caps) - 1):
        if caps[i] < caps[i + 1]:
            raise ValueError(f"caps must be non-increasing, got {caps!r}")


def degree(mu: Sequence[int]) -> int:
    return sum(mu)


def divides(mu: Sequence[int], nu: Sequence[int]) -> bool:
    if len(mu) != len(nu):
        raise ValueError(f"length mismatch: {len(mu)} vs {len(nu)}")
    return all(a <= b for a, b in zip(mu, nu))


def revlex_less(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """Strict reverse-lex comparison of two monomials of equal degree.

    ``mu < nu`` when, at the last index where they differ, ``mu`` has the
    smaller exponent.
    """
    if len(mu) != len(nu):
        raise ValueError(f"length mismatch: {len(mu)} vs {len(nu)}")
    if sum(mu) != sum(nu):
        raise ValueError("reverse-lex order is only defined within a degree")
    for a, b in zip(reversed(mu), reversed(nu)):
        if a != b:
            return a < b
    return False


def revlex_key(mu: Sequence[int]) -> tuple:
    """Sort key agreeing with :func:`revlex_less` inside one degree."""
    return tuple(reversed(mu))


def in_caps(mu: Sequence[int], caps: Sequence) -> bool:
    return len(mu) == len(caps) and all(0 <= c <= a for c, a in zip(mu, caps))


def _vectors(caps, d):
    if not caps:
        if d == 0:
            yield ()
        return
    top = d if caps[0] is UNBOUNDED else min(caps[0], d)
    for c in range(top + 1):
        for rest in _vectors(caps[1:], d - c):
            yield (c,) + rest


@functools.lru_cache(maxsize=None)
def _enumerate_degree(caps: tuple, d: int) -> tuple:
    return tuple(sorted(_vectors(caps, d), key=revlex_key))


def enumerate_degree(caps: Sequence, d: int) -> tuple:
    """All members of S(caps) of degree ``d``, ascending in reverse-lex order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return _enumerate_degree(as_caps(caps), d)


def enumerate_up_to(caps: Sequence, d: int) -> list:
    """Members of S(caps) of degree at most ``d``, by degree then reverse-lex."""
    out = []
    for i in range(d + 1):
        out.extend(enumerate_degree(caps, i))
    return out


def is_multicomplex(members: Iterable[Sequence[int]], caps: Sequence) -> bool:
    caps = as_caps(caps)
    members = {tuple(mu) for mu in members}
    if not members:
        return False
    for mu in members:
        if not in_caps(mu, caps):
            return False
        # closure under division by a single variable suffices
        for i, c in enumerate(mu):
            if c and mu[:i] + (c - 1,) + mu[i + 1:] not in members:
                return False
    return True


def f_vector_of(members: Iterable[Sequence[int]]) -> tuple:
    """Degree histogram ``(F_0, F_1, ...)`` up to the top degree present."""
    counts = Counter(sum(mu) for mu in members)
    if not counts:
        return ()
    top = max(counts)
    return tuple(counts.get(i, 0) for i in range(top + 1))


def compress(F: Sequence[int], caps: Sequence) -> frozenset:
    """The first ``F_i`` degree-``i`` monomials of S(caps) for every ``i``.

    No closure check is made here; see :func:`is_realizable_f_vector`.
    """
    caps = as_caps(caps)
    check_caps_sorted(caps)
    out = []
    for i, count in enumerate(F):
        if count < 0:
            raise ValueError(f"negative entry F_{i} = {count}")
        if count == 0:
            continue
        slice_ = enumerate_degree(caps, i)
        if count > len(slice_):
            raise UnrealizableError(
                f"F_{i} = {count} exceeds the {len(slice_)} monomials of degree {i}", i
            )
        out.extend(slice_[:count])
    return frozenset(out)


def first_closure_failure(F: Sequence[int], caps: Sequence):
    """Degree of the first failure to realise ``F``, or ``None`` if realisable."""
    caps = as_caps(caps)
    try:
        members = compress(F, caps)
    except UnrealizableError as exc:
        return exc.degree
    if not F or F[0] != 1:
        return 0
    for i in range(1, len(F)):
        for mu in members:
            if sum(mu) != i:
                continue
            for j, c in enumerate(mu):
                if c and mu[:j] + (c - 1,) + mu[j + 1:] not in members:
                    return i
    return None


def is_realizable_f_vector(F: Sequence[int], caps: Sequence) -> bool:
    try:
        members = compress(F, caps)
    except UnrealizableError:
        return False
    return is_multicomplex(members, caps)


def is_compressed(members: Iterable[Sequence[int]], caps: Sequence) -> bool:
    """True when every degree slice is a reverse-lex initial segment."""
    members = frozenset(tuple(mu) for mu in members)
    try:
        return compress(f_vector_of(members), caps) == members
    except UnrealizableError:
        return False


def format_monomial(mu: Sequence[int]) -> str:
    """``(2, 1) -> 'x1^2x2'``; the constant monomial prints as ``1``."""
    parts = []
    for i, c in enumerate(mu, start=1):
        if c == 1:
            parts.append(f"x{i}")
        elif c > 1:
            parts.append(f"x{i}^{c}")
    return "".join(parts) or "1"
