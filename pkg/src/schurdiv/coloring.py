"""Finite colorings of the positive integers.

Four rule families share one interface: explicit tables, residue classes
modulo m, cosets of the k-th-power subgroup modulo a prime, and
completely multiplicative functions into roots of unity.  Color indices
are 0-based everywhere.  Colorings are immutable after construction and
`color_of` is pure, so instances are safe to share across workers.

Residue and coset rules reduce modulo something, so they accept
arbitrary-precision arguments; explicit tables are bounded and raise
OutOfDomainError outside their table.

Coset colorings assign one color per coset of the subgroup of k-th
powers in the multiplicative group mod p (ordered by smallest positive
representative) plus one dedicated extra color for multiples of p, which
makes them total on all positive integers.

A one-line spec grammar mirrors all of this for the command line:

    parity | mod:M:c0,...,c(M-1) | coset:P:K | explicit:PATH
          | unity:K:p1=e1,p2=e2,...[:default=e]
"""

from __future__ import annotations

import json
from math import gcd

from .multiplicative import UnityFunction, evaluate
from .primes import is_prime

__all__ = [
    "Coloring",
    "ColoringSpecError",
    "CosetColoring",
    "ExplicitColoring",
    "OutOfDomainError",
    "ResidueColoring",
    "UnityColoring",
    "coset_coloring",
    "parity_coloring",
    "parse_coloring_spec",
    "unity_coloring",
]


class OutOfDomainError(ValueError):
    """Argument outside the coloring's declared domain."""


class ColoringSpecError(ValueError):
    """Malformed coloring spec string; carries the offending position."""

    def __init__(self, spec: str, position: int, message: str):
        self.spec = spec
        self.position = position
        super().__init__(f"coloring spec {spec!r}, position {position}: {message}")


class Coloring:
    """Total assignment of colors {0..num_colors-1} on a declared domain."""

    num_colors: int
    domain_max: int | None  # None means unbounded

    def color_of(self, n: int) -> int:
        raise NotImplementedError

    def _check_positive(self, n: int) -> None:
        if n < 1:
            raise OutOfDomainError(f"colorings are defined on positive integers, got {n}")


class ExplicitColoring(Coloring):
    """Colors read off a table for 1..len(table)."""

    def __init__(self, table):
        table = tuple(int(c) for c in table)
        if not table:
            raise ValueError("explicit color table must be non-empty")
        if min(table) < 0:
            raise ValueError("explicit color table entries must be >= 0")
        self.table = table
        self.num_colors = max(table) + 1
        self.domain_max = len(table)

    def color_of(self, n: int) -> int:
        self._check_positive(n)
        if n > self.domain_max:
            raise OutOfDomainError(f"n={n} outside explicit domain 1..{self.domain_max}")
        return self.table[n - 1]


class ResidueColoring(Coloring):
    """Color determined by n mod modulus through a residue -> color map."""

    def __init__(self, modulus: int, class_map):
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        class_map = tuple(int(c) for c in class_map)
        if len(class_map) != modulus:
            raise ValueError(f"class map must have {modulus} entries, got {len(class_map)}")
        if min(class_map) < 0:
            raise ValueError("class map entries must be >= 0")
        self.modulus = modulus
        self.class_map = class_map
        self.num_colors = max(class_map) + 1
        self.domain_max = None

    def color_of(self, n: int) -> int:
        self._check_positive(n)
        return self.class_map[n % self.modulus]

    def color_of_residue(self, r: int) -> int:
        return self.class_map[r % self.modulus]


class CosetColoring(Coloring):
    """Cosets of the k-th-power subgroup mod p, plus an extra color at 0 mod p.

    Coset colors are indexed by smallest positive representative; the extra
    color is the last index.  The number of coset classes is gcd(k, p-1).
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError(f"coset coloring needs a prime modulus, got {p}")
        if k < 1:
            raise ValueError(f"power exponent must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.coset_count = gcd(k, p - 1)
        self.extra_color = self.coset_count
        self.num_colors = self.coset_count + 1
        self.domain_max = None
        self.modulus = p

        powers = sorted({pow(s, k, p) for s in range(1, p)})
        table = [self.extra_color] * p  # index 0 keeps the extra color
        next_color = 0
        for r in range(1, p):
            if table[r] == self.extra_color:
                for h in powers:
                    table[r * h % p] = next_color
                next_color += 1
        assert next_color == self.coset_count
        self._color_by_residue = tuple(table)

    def color_of(self, n: int) -> int:
        self._check_positive(n)
        return self._color_by_residue[n % self.p]

    def color_of_residue(self, r: int) -> int:
        return self._color_by_residue[r % self.p]

    def classes_on_units(self) -> tuple[frozenset[int], ...]:
        """The coset classes restricted to {1..p-1}, indexed by color."""
        classes = [set() for _ in range(self.coset_count)]
        for r in range(1, self.p):
            classes[self._color_by_residue[r]].add(r)
        return tuple(frozenset(c) for c in classes)


class UnityColoring(Coloring):
    """Color of n is the exponent of a root-of-unity function at n."""

    def __init__(self, func: UnityFunction):
        self.func = func
        self.num_colors = func.k
        self.domain_max = None

    def color_of(self, n: int) -> int:
        self._check_positive(n)
        return evaluate(self.func, n)


def parity_coloring() -> ResidueColoring:
    return ResidueColoring(2, (0, 1))


def coset_coloring(p: int, k: int) -> CosetColoring:
    return CosetColoring(p, k)


def unity_coloring(f: UnityFunction) -> UnityColoring:
    return UnityColoring(f)


def _spec_int(spec: str, token: str, position: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ColoringSpecError(spec, position, f"expected an integer {what}, got {token!r}") from None


def parse_coloring_spec(spec: str) -> Coloring:
    """Parse the one-line coloring grammar (see module docstring)."""
    if spec == "parity":
        return parity_coloring()
    head, _, rest = spec.partition(":")
    body_pos = len(head) + 1
    if head == "mod":
        mod_token, sep, colors_token = rest.partition(":")
        if not sep:
            raise ColoringSpecError(spec, body_pos, "expected mod:M:c0,...,c(M-1)")
        m = _spec_int(spec, mod_token, body_pos, "modulus")
        colors_pos = body_pos + len(mod_token) + 1
        entries = colors_token.split(",") if colors_token else []
        if len(entries) != m:
            raise ColoringSpecError(spec, colors_pos, f"expected {m} colors, got {len(entries)}")
        class_map = [_spec_int(spec, e, colors_pos, "color") for e in entries]
        if min(class_map) < 0:
            raise ColoringSpecError(spec, colors_pos, "colors must be >= 0")
        return ResidueColoring(m, class_map)
    if head == "coset":
        p_token, sep, k_token = rest.partition(":")
        if not sep:
            raise ColoringSpecError(spec, body_pos, "expected coset:P:K")
        p = _spec_int(spec, p_token, body_pos, "prime")
        k = _spec_int(spec, k_token, body_pos + len(p_token) + 1, "exponent")
        if not is_prime(p):
            raise ColoringSpecError(spec, body_pos, f"{p} is not prime")
        if k < 1:
            raise ColoringSpecError(spec, body_pos + len(p_token) + 1, "exponent must be >= 1")
        return CosetColoring(p, k)
    if head == "explicit":
        path = rest
        if not path:
            raise ColoringSpecError(spec, body_pos, "expected explicit:PATH")
        try:
            with open(path, "r", encoding="utf-8") as fh:
                table = json.load(fh)
        except OSError as exc:
            raise ColoringSpecError(spec, body_pos, f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ColoringSpecError(spec, body_pos, f"bad JSON in {path}: {exc}") from None
        if not isinstance(table, list) or not all(isinstance(c, int) for c in table):
            raise ColoringSpecError(spec, body_pos, f"{path} must hold a JSON array of integers")
        return ExplicitColoring(table)
    if head == "unity":
        parts = rest.split(":")
        if len(parts) not in (2, 3):
            raise ColoringSpecError(spec, body_pos, "expected unity:K:p=e,...[:default=e]")
        k = _spec_int(spec, parts[0], body_pos, "root order")
        if k < 1:
            raise ColoringSpecError(spec, body_pos, "root order must be >= 1")
        assigns_pos = body_pos + len(parts[0]) + 1
        exponents: dict[int, int] = {}
        if parts[1]:
            offset = assigns_pos
            for pair in parts[1].split(","):
                p_token, sep, e_token = pair.partition("=")
                if not sep:
                    raise ColoringSpecError(spec, offset, f"expected p=e, got {pair!r}")
                p = _spec_int(spec, p_token, offset, "prime")
                e = _spec_int(spec, e_token, offset + len(p_token) + 1, "exponent")
                if not is_prime(p):
                    raise ColoringSpecError(spec, offset, f"{p} is not prime")
                if p in exponents:
                    raise ColoringSpecError(spec, offset, f"prime {p} assigned twice")
                exponents[p] = e
                offset += len(pair) + 1
        default = 0
        if len(parts) == 3:
            default_pos = assigns_pos + len(parts[1]) + 1
            key, sep, val = parts[2].partition("=")
            if key != "default" or not sep:
                raise ColoringSpecError(spec, default_pos, f"expected default=e, got {parts[2]!r}")
            default = _spec_int(spec, val, default_pos + len(key) + 1, "default exponent")
        return UnityColoring(UnityFunction(k, exponents, default))
    raise ColoringSpecError(
        spec, 0, "expected one of parity | mod:... | coset:... | explicit:... | unity:..."
    )
