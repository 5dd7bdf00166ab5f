"""
Central and affine hyperplane arrangements over Q.

A central form is a coefficient vector c with hyperplane c . x = 0. An affine
form (a_1, ..., a_r, b) stands for a . x = b.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from matlc.errors import DomainError, ParseError
from matlc.linalg import format_rational, is_proportional, parse_rational, rational_rank
from matlc.matroids.base import GroundSet, default_labels
from matlc.matroids.linear import LinearMatroid

Form = Tuple[Fraction, ...]


def _parse_forms(raw: Any) -> Tuple[Form, ...]:
    if not isinstance(raw, (list, tuple)) or not raw:
        raise ParseError("forms must be a nonempty list of coefficient lists")
    forms = []
    for i, row in enumerate(raw):
        if not isinstance(row, (list, tuple)) or not row:
            raise ParseError(f"form {i}: expected a nonempty list of rationals")
        forms.append(tuple(parse_rational(x) for x in row))
    if len({len(f) for f in forms}) != 1:
        raise ParseError("all forms must have the same number of coefficients")
    return tuple(forms)


def _labels_for(forms: Sequence[Form], labels: Optional[Sequence[str]]) -> Tuple[str, ...]:
    labels = tuple(labels) if labels is not None else default_labels(len(forms))
    if len(labels) != len(forms):
        raise DomainError(f"{len(labels)} labels for {len(forms)} forms")
    return GroundSet(labels).labels


@dataclass(frozen=True)
class CentralArrangement:
    """Distinct linear hyperplanes; labels are aligned with the column matroid."""
    forms: Tuple[Form, ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        forms = _parse_forms(self.forms)
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "labels", _labels_for(forms, self.labels or None))
        for i, f in enumerate(forms):
            if not any(f):
                raise DomainError(f"form {self.labels[i]!r} is zero")
        for i in range(len(forms)):
            for j in range(i + 1, len(forms)):
                if is_proportional(forms[i], forms[j]):
                    raise DomainError(
                        f"forms {self.labels[i]!r} and {self.labels[j]!r} define the same hyperplane"
                    )

    @property
    def dim(self) -> int:
        return len(self.forms[0])

    def __len__(self) -> int:
        return len(self.forms)

    @property
    def rank(self) -> int:
        return rational_rank(self.forms)

    def is_essential(self) -> bool:
        return self.rank == self.dim

    def matroid(self) -> LinearMatroid:
        """Column matroid of the forms."""
        return LinearMatroid([list(f) for f in self.forms], self.labels)

    def to_json(self) -> Dict[str, object]:
        return {
            "forms": [[format_rational(x) for x in f] for f in self.forms],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data: Any) -> "CentralArrangement":
        if not isinstance(data, dict) or "forms" not in data:
            raise ParseError("missing:forms")
        return cls(_parse_forms(data["forms"]), tuple(data.get("labels") or ()))


@dataclass(frozen=True)
class AffineArrangement:
    """Affine hyperplanes a . x = b in Q^r; ``infinity`` names the hyperplane
    sent to infinity when the arrangement came from a decone."""
    forms: Tuple[Form, ...]
    labels: Tuple[str, ...] = ()
    infinity: Optional[str] = None

    def __post_init__(self):
        forms = _parse_forms(self.forms)
        if len(forms[0]) < 2:
            raise ParseError("affine forms need at least one coefficient and a constant")
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "labels", _labels_for(forms, self.labels or None))
        for i, f in enumerate(forms):
            if not any(f[:-1]):
                raise DomainError(f"form {self.labels[i]!r} has a zero normal vector")
        for i in range(len(forms)):
            for j in range(i + 1, len(forms)):
                if is_proportional(forms[i], forms[j]):
                    raise DomainError(f"forms {self.labels[i]!r} and {self.labels[j]!r} define the same hyperplane")

    @property
    def dim(self) -> int:
        return len(self.forms[0]) - 1

    def __len__(self) -> int:
        return len(self.forms)

    def normal(self, i: int) -> Form:
        return self.forms[i][:-1]

    def normals(self) -> List[Form]:
        return [self.normal(i) for i in range(len(self.forms))]

    @property
    def rank(self) -> int:
        return rational_rank(self.normals())

    def is_essential(self) -> bool:
        return self.rank == self.dim

    def to_json(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "forms": [[format_rational(x) for x in f] for f in self.forms],
            "labels": list(self.labels),
        }
        if self.infinity is not None:
            out["infinity"] = self.infinity
        return out

    @classmethod
    def from_json(cls, data: Any) -> "AffineArrangement":
        if not isinstance(data, dict) or "forms" not in data:
            raise ParseError("missing:forms")
        return cls(_parse_forms(data["forms"]), tuple(data.get("labels") or ()), data.get("infinity"))


def generic_lines(n: int) -> AffineArrangement:
    """Lines x + i*y = i^2, i = 1..n: no two parallel, no three concurrent."""
    return AffineArrangement(tuple((Fraction(1), Fraction(i), Fraction(i * i)) for i in range(1, n + 1)))


def concurrent_lines(n: int) -> AffineArrangement:
    """n >= 2 lines through the origin."""
    return AffineArrangement(tuple((Fraction(1), Fraction(i), Fraction(0)) for i in range(n)))


def _random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def random_central_arrangement(
    rng: random.Random, n: int, dim: int = 3, bound: int = 3, max_tries: int = 1000
) -> CentralArrangement:
    """Essential arrangement of n distinct random rational hyperplanes in Q^dim."""
    if n < dim:
        raise DomainError(f"{n} hyperplanes cannot be essential in dimension {dim}")
    for _ in range(max_tries):
        forms: List[Form] = []
        while len(forms) < n:
            f = tuple(_random_rational(rng, bound) for _ in range(dim))
            if any(f) and not any(is_proportional(f, g) for g in forms):
                forms.append(f)
        if rational_rank(forms) == dim:
            return CentralArrangement(tuple(forms))
    raise DomainError(f"no essential arrangement found in {max_tries} draws")
