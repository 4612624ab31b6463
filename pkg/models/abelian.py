"""
Value types for finitely generated abelian groups and divisible groups.

Groups are stored in invariant-factor form: ``free_rank`` copies of Z followed
by Z/d1 + ... + Z/dk with d1 | d2 | ... | dk. Elements are plain tuples of
integer coordinates (free coordinates first), with torsion coordinates kept
reduced. Homomorphism matrices have one row per target coordinate and one
column per source generator.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd, prod
from typing import Any, Dict, Iterator, Mapping, Optional, Sequence, Tuple

from sympy import isprime

from algebra.errors import IllDefinedHom, InvalidElement, NotComputable

# An element of an AbGroup: free coordinates, then reduced torsion coordinates.
GroupElement = Tuple[int, ...]


@dataclass(frozen=True)
class AbGroup:
    """
    A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk.

    Attributes:
        free_rank: Number of Z summands
        torsion: Invariant factors, each >= 2, forming a divisibility chain
    """

    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise InvalidElement(f"free rank must be non-negative, got {self.free_rank}")
        for d in self.torsion:
            if d < 2:
                raise InvalidElement(f"torsion coefficients must be >= 2, got {d}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise InvalidElement(f"torsion {list(self.torsion)} is not a divisibility chain")

    @classmethod
    def trivial(cls) -> "AbGroup":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "AbGroup":
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, d: int) -> "AbGroup":
        """Z/d, with Z/0 read as Z and Z/1 as the trivial group."""
        d = abs(d)
        if d == 0:
            return cls(free_rank=1)
        if d == 1:
            return cls()
        return cls(torsion=(d,))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def orders(self) -> Tuple[int, ...]:
        """Order of each canonical generator, 0 standing for infinite order."""
        return (0,) * self.free_rank + self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self) -> Optional[int]:
        """Cardinality, or None when the group is infinite."""
        if not self.is_finite():
            return None
        return prod(self.torsion)

    def zero(self) -> GroupElement:
        return (0,) * self.ngens

    def reduce(self, coords: Sequence[int]) -> GroupElement:
        """
        Bring integer coordinates into canonical reduced form.

        Raises:
            InvalidElement: If the coordinate count does not match
        """
        if len(coords) != self.ngens:
            raise InvalidElement(
                f"expected {self.ngens} coordinates for {self}, got {len(coords)}",
                {"coords": list(coords)},
            )
        r = self.free_rank
        return tuple(int(c) for c in coords[:r]) + tuple(
            int(c) % d for c, d in zip(coords[r:], self.torsion)
        )

    def add(self, x: Sequence[int], y: Sequence[int]) -> GroupElement:
        return self.reduce([a + b for a, b in zip(x, y)])

    def neg(self, x: Sequence[int]) -> GroupElement:
        return self.reduce([-a for a in x])

    def sub(self, x: Sequence[int], y: Sequence[int]) -> GroupElement:
        return self.reduce([a - b for a, b in zip(x, y)])

    def scale(self, n: int, x: Sequence[int]) -> GroupElement:
        return self.reduce([n * a for a in x])

    def is_zero(self, x: Sequence[int]) -> bool:
        return self.reduce(x) == self.zero()

    def element_order(self, x: Sequence[int]) -> int:
        """Order of an element, 0 when it has infinite order."""
        x = self.reduce(x)
        if any(x[: self.free_rank]):
            return 0
        n = 1
        for c, d in zip(x[self.free_rank:], self.torsion):
            if c:
                k = d // gcd(c, d)
                n = n * k // gcd(n, k)
        return n

    def elements(self) -> Iterator[GroupElement]:
        """
        Iterate over all elements in lexicographic coordinate order.

        Raises:
            NotComputable: If the group is infinite
        """
        if not self.is_finite():
            raise NotComputable(f"cannot enumerate the infinite group {self}")
        return iter(product(*(range(d) for d in self.torsion)))

    def killed_by(self, n: int) -> Iterator[GroupElement]:
        """
        Iterate over the elements x with n*x = 0, for n != 0.

        Only torsion coordinates can be nonzero; coordinate i runs over the
        multiples of d_i / gcd(n, d_i).
        """
        ranges = [range(1)] * self.free_rank + [
            range(0, d, d // gcd(n, d)) for d in self.torsion
        ]
        return iter(product(*ranges))

    def direct_sum(self, other: "AbGroup") -> "AbGroup":
        return AbGroup.from_orders(
            self.free_rank + other.free_rank, list(self.torsion) + list(other.torsion)
        )

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> "AbGroup":
        """
        Canonical form of Z^free_rank + sum of Z/d over ``orders``.

        Orders equal to 0 count as extra free summands; orders equal to 1 vanish.
        """
        from algebra.abelian import canonical_form

        extra = sum(1 for d in orders if d == 0)
        finite = [abs(d) for d in orders if d not in (0, 1, -1)]
        relations = [[d if i == j else 0 for j in range(len(finite))] for i, d in enumerate(finite)]
        group, _ = canonical_form(relations, len(finite))
        return cls(free_rank=free_rank + extra, torsion=group.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "group", "rank": self.free_rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class AbHom:
    """
    A homomorphism between AbGroups.

    Attributes:
        source: Domain
        target: Codomain
        matrix: Rows indexed by target coordinates, columns by source
            generators; each column is the (reduced) image of a generator
    """

    source: AbGroup
    target: AbGroup
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n, m = self.source.ngens, self.target.ngens
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(rows) != m or any(len(row) != n for row in rows):
            raise IllDefinedHom(
                f"matrix shape does not match {self.source} -> {self.target} "
                f"(expected {m}x{n})"
            )
        columns = [self.target.reduce([rows[i][j] for i in range(m)]) for j in range(n)]
        for j, d in enumerate(self.source.orders):
            if d and not self.target.is_zero(self.target.scale(d, columns[j])):
                raise IllDefinedHom(
                    f"generator {j} has order {d} but its image {list(columns[j])} "
                    f"is not killed by {d}",
                    {"generator": j, "image": list(columns[j])},
                )
        object.__setattr__(
            self, "matrix", tuple(tuple(columns[j][i] for j in range(n)) for i in range(m))
        )

    @classmethod
    def from_columns(cls, source: AbGroup, target: AbGroup, columns: Sequence[Sequence[int]]) -> "AbHom":
        m = target.ngens
        return cls(source, target, tuple(tuple(col[i] for col in columns) for i in range(m)))

    @cached_property
    def columns(self) -> Tuple[GroupElement, ...]:
        return tuple(
            tuple(self.matrix[i][j] for i in range(self.target.ngens))
            for j in range(self.source.ngens)
        )

    def apply(self, x: Sequence[int]) -> GroupElement:
        """Image of a source element."""
        return self.target.reduce(
            [sum(row[j] * x[j] for j in range(len(x))) for row in self.matrix]
        )

    def is_zero(self) -> bool:
        return all(not any(col) for col in self.columns)

    def __str__(self) -> str:
        return f"{self.source} -> {self.target} {[list(r) for r in self.matrix]}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "matrix": [list(row) for row in self.matrix],
        }


@dataclass(frozen=True)
class DivElement:
    """
    An element of a DivisibleGroup.

    Attributes:
        q_part: One rational per Q summand
        pruefer_part: One rational in [0, 1) per Pruefer copy, with a
            denominator that is a power of the copy's prime
    """

    q_part: Tuple[Fraction, ...] = ()
    pruefer_part: Tuple[Fraction, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": [str(x) for x in self.q_part],
            "pruefer": [str(x) for x in self.pruefer_part],
        }


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class DivisibleGroup:
    """
    A divisible group Q^q_rank + sum over p of Z(p^inf)^{s_p}.

    Attributes:
        q_rank: Number of Q summands
        pruefer: Sorted (prime, multiplicity) pairs, multiplicities >= 1
    """

    q_rank: int = 0
    pruefer: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(p), int(s)) for p, s in self.pruefer))
        if self.q_rank < 0:
            raise InvalidElement(f"q_rank must be non-negative, got {self.q_rank}")
        for p, s in pairs:
            if not isprime(p):
                raise InvalidElement(f"Pruefer key {p} is not prime")
            if s < 1:
                raise InvalidElement(f"multiplicity of Z({p}^inf) must be >= 1, got {s}")
        if len({p for p, _ in pairs}) != len(pairs):
            raise InvalidElement("Pruefer primes must be distinct")
        object.__setattr__(self, "pruefer", pairs)

    @classmethod
    def from_mapping(cls, q_rank: int, pruefer: Mapping[int, int]) -> "DivisibleGroup":
        return cls(q_rank=q_rank, pruefer=tuple(pruefer.items()))

    @property
    def pruefer_map(self) -> Dict[int, int]:
        return dict(self.pruefer)

    @cached_property
    def copies(self) -> Tuple[int, ...]:
        """The prime of every Pruefer copy, in storage order."""
        return tuple(p for p, s in self.pruefer for _ in range(s))

    def is_trivial(self) -> bool:
        return self.q_rank == 0 and not self.pruefer

    def zero(self) -> DivElement:
        return DivElement((Fraction(0),) * self.q_rank, (Fraction(0),) * len(self.copies))

    def element(self, q_part: Sequence[Any], pruefer_part: Sequence[Any]) -> DivElement:
        """
        Build a reduced element, validating Pruefer denominators.

        Raises:
            InvalidElement: On a length mismatch or a denominator that is not
                a power of the copy's prime
        """
        if len(q_part) != self.q_rank or len(pruefer_part) != len(self.copies):
            raise InvalidElement(f"element shape does not match {self}")
        reduced = []
        for x, p in zip(pruefer_part, self.copies):
            x = Fraction(x) % 1
            if not _is_power_of(x.denominator, p):
                raise InvalidElement(f"{x} does not lie in Z({p}^inf)")
            reduced.append(x)
        return DivElement(tuple(Fraction(x) for x in q_part), tuple(reduced))

    def add(self, x: DivElement, y: DivElement) -> DivElement:
        return DivElement(
            tuple(a + b for a, b in zip(x.q_part, y.q_part)),
            tuple((a + b) % 1 for a, b in zip(x.pruefer_part, y.pruefer_part)),
        )

    def neg(self, x: DivElement) -> DivElement:
        return self.scale(-1, x)

    def scale(self, n: int, x: DivElement) -> DivElement:
        return DivElement(
            tuple(n * a for a in x.q_part),
            tuple((n * a) % 1 for a in x.pruefer_part),
        )

    def is_zero(self, x: DivElement) -> bool:
        return x == self.zero()

    def divide(self, x: DivElement, n: int) -> DivElement:
        """
        Return some y with n*y = x.

        Q coordinates divide exactly. In a Z(p^inf) copy, write n = p^e * u
        with p not dividing u and x = a/p^k; then y = (a * u^-1 mod p^(k+e)) / p^(k+e).
        """
        if n == 0:
            raise InvalidElement("cannot divide by zero")
        sign = 1 if n > 0 else -1
        n = abs(n)
        pr = []
        for a, p in zip(x.pruefer_part, self.copies):
            e, u = 0, n
            while u % p == 0:
                u //= p
                e += 1
            modulus = a.denominator * p**e
            y = Fraction(a.numerator * pow(u, -1, modulus) % modulus, modulus)
            pr.append((sign * y) % 1)
        return DivElement(tuple(sign * a / n for a in x.q_part), tuple(pr))

    def killed_by(self, n: int) -> Iterator[DivElement]:
        """
        Iterate over the (finitely many) elements y with n*y = 0, for n != 0.
        """
        ranges = []
        for p in self.copies:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            ranges.append([Fraction(j, p**k) for j in range(p**k)])
        for combo in product(*ranges):
            yield DivElement((Fraction(0),) * self.q_rank, tuple(combo))

    def __str__(self) -> str:
        parts = []
        if self.q_rank == 1:
            parts.append("Q")
        elif self.q_rank > 1:
            parts.append(f"Q^{self.q_rank}")
        for p, s in self.pruefer:
            parts.append(f"Z({p}^inf)" + (f"^{s}" if s > 1 else ""))
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "divisible",
            "q_rank": self.q_rank,
            "pruefer": {str(p): s for p, s in self.pruefer},
        }


@dataclass(frozen=True)
class DivHom:
    """
    A homomorphism from an AbGroup into a DivisibleGroup.

    Attributes:
        source: Domain
        target: Divisible codomain
        images: Image of each source generator
    """

    source: AbGroup
    target: DivisibleGroup
    images: Tuple[DivElement, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.images) != self.source.ngens:
            raise IllDefinedHom(
                f"expected {self.source.ngens} generator images, got {len(self.images)}"
            )
        images = tuple(
            self.target.element(x.q_part, x.pruefer_part) for x in self.images
        )
        for j, d in enumerate(self.source.orders):
            if d and not self.target.is_zero(self.target.scale(d, images[j])):
                raise IllDefinedHom(
                    f"generator {j} has order {d} but its image is not killed by {d}",
                    {"generator": j, "image": images[j].to_dict()},
                )
        object.__setattr__(self, "images", images)

    def apply(self, x: Sequence[int]) -> DivElement:
        total = self.target.zero()
        for c, img in zip(x, self.images):
            if c:
                total = self.target.add(total, self.target.scale(c, img))
        return total

    def is_zero(self) -> bool:
        return all(self.target.is_zero(img) for img in self.images)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "images": [img.to_dict() for img in self.images],
        }
