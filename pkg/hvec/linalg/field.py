"""Prime field scalars."""

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime

from ..errors import DimensionMismatchError

DEFAULT_PRIME = 2147483647
MAX_PRIME = 2**63


@lru_cache(maxsize=64)
def check_prime(p: int) -> int:
    """Validate a field modulus.

    Args:
        p: Candidate modulus.

    Returns:
        int: ``p`` unchanged.

    Raises:
        ValueError: If ``p`` is not a prime below 2**63.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"Field modulus must be an integer, got {p!r}")
    if p >= MAX_PRIME:
        raise ValueError(f"Field modulus {p} must be below 2**63")
    if not isprime(p):
        raise ValueError(f"Field modulus {p} is not prime")
    return p


def inverse(a: int, p: int) -> int:
    """Multiplicative inverse of a nonzero residue."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in GF({p})")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FieldScalar:
    """An element of GF(p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldScalar):
            if other.p != self.p:
                raise DimensionMismatchError(f"Cannot combine GF({self.p}) and GF({other.p}) scalars")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldScalar(self.value * inverse(v, self.p), self.p)

    def inverse(self) -> "FieldScalar":
        return FieldScalar(inverse(self.value, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldScalar({self.value} mod {self.p})"
