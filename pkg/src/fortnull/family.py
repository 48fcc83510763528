"""Families of vertex subsets (forts, circuits, null supports)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import bits, lex_key, mask_set, to_mask

KINDS = ("all", "minimal", "custom")


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks, lex sorted."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), lex_key(m)))
    keep: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return sorted(keep, key=lex_key)


def is_antichain(masks: Iterable[int]) -> bool:
    ms = list(masks)
    return not any(a != b and a & b == a for a in ms for b in ms)


@dataclass(frozen=True)
class FortCollection:
    """A family of vertex subsets of ``range(ground_n)``.

    Members are stored as bitmasks, deduplicated and sorted lexicographically
    by their ascending vertex lists.  ``kind`` records provenance; a
    ``"minimal"`` collection is checked to be an antichain.
    """

    ground_n: int
    masks: tuple[int, ...]
    kind: str = "custom"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        limit = 1 << self.ground_n
        for m in self.masks:
            if m == 0:
                raise ValueError("members must be nonempty")
            if m >= limit:
                raise ValueError(f"member {bits(m)} exceeds ground set of size {self.ground_n}")
        ordered = tuple(sorted(set(self.masks), key=lex_key))
        object.__setattr__(self, "masks", ordered)
        if self.kind == "minimal" and not is_antichain(ordered):
            raise ValueError("a minimal collection must be an antichain")

    @classmethod
    def from_sets(cls, ground_n: int, sets: Iterable, kind: str = "custom") -> "FortCollection":
        return cls(ground_n, tuple(to_mask(s) for s in sets), kind)

    def __len__(self):
        return len(self.masks)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return (mask_set(m) for m in self.masks)

    def __contains__(self, item) -> bool:
        return to_mask(item) in self.masks

    def sets(self) -> list[frozenset[int]]:
        return [mask_set(m) for m in self.masks]

    def as_lists(self, offset: int = 0) -> list[list[int]]:
        return [[v + offset for v in bits(m)] for m in self.masks]

    def minimal(self) -> "FortCollection":
        return FortCollection(self.ground_n, tuple(minimal_masks(self.masks)), "minimal")

    def union(self) -> int:
        u = 0
        for m in self.masks:
            u |= m
        return u

    def to_json(self, offset: int = 0) -> dict:
        return {"forts": self.as_lists(offset), "count": len(self), "minimal": self.kind == "minimal"}


def as_masks(family) -> list[int]:
    """Accept a FortCollection or any iterable of vertex sets / masks."""
    if isinstance(family, FortCollection):
        return list(family.masks)
    return [to_mask(s) for s in family]
