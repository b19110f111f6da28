"""Integer-coefficient Laurent polynomials in one variable.

Canonical form never stores zero coefficients.  The default variable is
``A`` (the bracket variable); the writhe-normalized invariant lives in
``Z[A, A^-1]`` with the substitution ``t = A^-4`` relating it to the usual
one-variable normalization.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Laurent:
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {e: c for e, c in self.coeffs.items() if c != 0}
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def zero() -> "Laurent":
        return Laurent({})

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "Laurent":
        return Laurent({exp: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            return Laurent({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Laurent":
        """Multiply by the k-th power of the variable."""
        return Laurent({e + k: c for e, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def items_ascending(self):
        return sorted(self.coeffs.items())

    def to_string(self, var: str = "A") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items_ascending():
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                power = var if e == 1 else f"{var}^{e}"
                term = f"{mag}{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Laurent({self.to_string()})"


#: the bracket loop factor -A^2 - A^-2
LOOP_FACTOR = Laurent({2: -1, -2: -1})
