"""
Matroid interface shared by every representation.

Subsets of the ground set are encoded as int bitmasks: bit i is the i-th label
of the ground set. The ground-set order is the element order used for broken
circuits unless an explicit ordering is supplied.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from string import ascii_lowercase
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from matlc.config import resolve_cap
from matlc.errors import DomainError, check_capacity

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def default_labels(n: int) -> Tuple[str, ...]:
    """a, b, c, ... for small ground sets, e1, e2, ... otherwise."""
    if n <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:n])
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class GroundSet:
    """Ordered ground set; the label sequence order is the element order."""
    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            seen = set()
            dup = next(x for x in labels if x in seen or seen.add(x))
            raise DomainError(f"duplicate element label {dup!r}")

    @cached_property
    def positions(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.positions

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self.positions[label]
        except KeyError:
            raise DomainError(f"element {label!r} is not in the ground set") from None

    def mask(self, labels: Iterable[str]) -> int:
        """Bitmask of a subset given by labels."""
        out = 0
        for label in labels:
            out |= 1 << self.index(label)
        return out

    def subset(self, mask: int) -> FrozenSet[str]:
        return frozenset(self.labels[i] for i in iter_bits(mask))

    def sorted_labels(self, mask: int) -> Tuple[str, ...]:
        """Labels of a subset in ground-set order."""
        return tuple(self.labels[i] for i in iter_bits(mask))

    def with_label(self, label: str, first: bool = False) -> "GroundSet":
        if first:
            return GroundSet((label,) + self.labels)
        return GroundSet(self.labels + (label,))


def subset_sort_key(mask: int) -> Tuple[int, ...]:
    """Lexicographic key by sorted element indices."""
    return tuple(iter_bits(mask))


class Matroid(ABC):
    """A matroid given by a rank oracle on bitmasks.

    Instances are immutable; rank values, independent sets and circuits are
    cached lazily and every cache fill is idempotent.
    """
    kind = "abstract"

    def __init__(self, ground: GroundSet):
        self.ground = ground
        self._rank_cache: Dict[int, int] = {}

    @property
    @abstractmethod
    def representable_over_q(self) -> bool:
        """True when the matroid is known to be representable over Q."""
        raise NotImplementedError

    @abstractmethod
    def _rank(self, mask: int) -> int:
        """Compute the rank of a subset; called once per subset."""
        raise NotImplementedError

    def __len__(self) -> int:
        return len(self.ground)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={len(self)}, rank={self.full_rank})"

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.ground.labels

    def rank_mask(self, mask: int) -> int:
        cached = self._rank_cache.get(mask)
        if cached is None:
            cached = self._rank(mask)
            self._rank_cache[mask] = cached
        return cached

    def rank(self, subset: Optional[Iterable[str]] = None) -> int:
        """Rank of a labelled subset (the whole ground set when omitted)."""
        if subset is None:
            return self.full_rank
        return self.rank_mask(self.ground.mask(subset))

    @cached_property
    def full_rank(self) -> int:
        return self.rank_mask(self.ground.full_mask)

    def is_independent_mask(self, mask: int) -> bool:
        return self.rank_mask(mask) == popcount(mask)

    def is_independent(self, subset: Iterable[str]) -> bool:
        return self.is_independent_mask(self.ground.mask(subset))

    def closure_mask(self, mask: int) -> int:
        base = self.rank_mask(mask)
        out = mask
        for e in range(len(self)):
            bit = 1 << e
            if not mask & bit and self.rank_mask(mask | bit) == base:
                out |= bit
        return out

    def closure(self, subset: Iterable[str]) -> FrozenSet[str]:
        return self.ground.subset(self.closure_mask(self.ground.mask(subset)))

    def has_loop(self) -> bool:
        return self.closure_mask(0) != 0

    def independent_masks(self, cap: Optional[int] = None) -> List[int]:
        """All independent sets, by size then lexicographically."""
        return self._enumeration(cap)[0]

    def circuit_masks(self, cap: Optional[int] = None) -> List[int]:
        """All circuits, lexicographic by sorted element indices."""
        return self._enumeration(cap)[1]

    def circuits(self, cap: Optional[int] = None) -> List[FrozenSet[str]]:
        return [self.ground.subset(c) for c in self.circuit_masks(cap)]

    def _enumeration(self, cap: Optional[int]) -> Tuple[List[int], List[int]]:
        cached = self.__dict__.get("_enumerated")
        if cached is not None:
            return cached
        check_capacity(len(self), resolve_cap(cap), f"{self.kind} enumeration")
        result = self._enumerate()
        self.__dict__["_enumerated"] = result
        return result

    def _enumerate(self) -> Tuple[List[int], List[int]]:
        """Grow independent sets level by level; a dependent one-element
        extension of an independent set is a circuit iff every one-element
        deletion of it is independent. Supersets of dependent sets are never
        visited."""
        n = len(self)
        full = self.full_rank
        independent: List[int] = [0]
        known = {0}
        circuits: List[int] = []
        level = [0]
        size = 0
        while level:
            nxt: List[int] = []
            for base in level:
                for e in range(base.bit_length(), n):
                    cand = base | (1 << e)
                    if size < full and self.rank_mask(cand) == size + 1:
                        nxt.append(cand)
                    elif all((cand & ~(1 << x)) in known for x in iter_bits(cand)):
                        circuits.append(cand)
            known.update(nxt)
            independent.extend(nxt)
            level = nxt
            size += 1
        circuits.sort(key=subset_sort_key)
        logger.debug(
            f"[Matroid] {self.kind}: {len(independent)} independent sets, {len(circuits)} circuits"
        )
        return independent, circuits

    def describe(self) -> Dict[str, object]:
        """JSON-ready summary of the matroid."""
        return {
            "kind": self.kind,
            "labels": list(self.labels),
            "rank": self.full_rank,
            "representable_over_q": self.representable_over_q,
        }
