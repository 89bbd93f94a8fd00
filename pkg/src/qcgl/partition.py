"""Partitions labelling module bases.

Finite partitions are plain tuples of ints: nonnegative with trailing zeros
trimmed for the Fock module, arbitrary weakly decreasing length-N tuples for
W^N.  Resonance labels are :class:`TailedPartition`, a finite prefix followed
by the periodic tail of a :class:`TailSpec`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Sequence, Tuple, Union

Parts = Tuple[int, ...]


@dataclass(frozen=True)
class TailSpec:
    k: int
    r: int
    c: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        if self.k < 1 or self.r < 2:
            raise ValueError(f"need k >= 1, r >= 2 (got k={self.k}, r={self.r})")
        if len(self.c) != self.k - 1:
            raise ValueError(f"c must have k-1 = {self.k - 1} entries, got {len(self.c)}")
        seq = (0,) + self.c
        if any(a > b for a, b in zip(seq, seq[1:])) or (self.c and self.c[-1] > self.r):
            raise ValueError(f"need 0 <= c_1 <= ... <= c_(k-1) <= r, got {self.c}")

    def value(self, j: int) -> int:
        return tail_value(self, j)

    def head(self, n: int) -> Parts:
        return tuple(tail_value(self, j) for j in range(1, n + 1))


def tail_value(t: TailSpec, j: int) -> int:
    """lambda0_j = -nu*r - c_i where j = nu*k + i + 1, 0 <= i < k."""
    if j < 1:
        raise ValueError("tail index starts at 1")
    nu, i = divmod(j - 1, t.k)
    ci = 0 if i == 0 else t.c[i - 1]
    return -nu * t.r - ci


def all_tail_specs(k: int, r: int) -> List[TailSpec]:
    """Every valid c-vector for (k, r)."""
    out = []
    for c in product(range(r + 1), repeat=k - 1):
        if all(a <= b for a, b in zip(c, c[1:])):
            out.append(TailSpec(k, r, c))
    return out


@dataclass(frozen=True)
class TailedPartition:
    """lambda_j = prefix[j-1] for j <= len(prefix), tail_value(spec, j) beyond."""

    prefix: Parts
    spec: TailSpec

    def __post_init__(self):
        p = list(self.prefix)
        while p and p[-1] == tail_value(self.spec, len(p)):
            p.pop()
        object.__setattr__(self, "prefix", tuple(p))

    @classmethod
    def vacuum(cls, spec: TailSpec) -> "TailedPartition":
        return cls((), spec)

    def part(self, j: int) -> int:
        if j <= len(self.prefix):
            return self.prefix[j - 1]
        return tail_value(self.spec, j)

    def __getitem__(self, j: int) -> int:
        return self.part(j)

    @property
    def stab(self) -> int:
        """Index after which the partition agrees with the tail."""
        return len(self.prefix)

    def parts(self, n: int) -> Parts:
        return tuple(self.part(j) for j in range(1, n + 1))

    def shifted(self, i: int, delta: int) -> "TailedPartition":
        n = max(i, self.stab)
        ps = list(self.parts(n))
        ps[i - 1] += delta
        return TailedPartition(tuple(ps), self.spec)

    def excess(self) -> int:
        return sum(self.part(j) - tail_value(self.spec, j) for j in range(1, self.stab + 1))

    def is_weakly_decreasing(self) -> bool:
        ps = self.parts(self.stab + 1)
        return all(a >= b for a, b in zip(ps, ps[1:]))

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "k": self.spec.k, "r": self.spec.r, "c": list(self.spec.c)}

    def __lt__(self, other: "TailedPartition") -> bool:
        return _graded_key(self) < _graded_key(other)


Label = Union[Parts, TailedPartition]


def is_partition(parts: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:]))


def trim(parts: Sequence[int]) -> Parts:
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def weight(lam: Label) -> int:
    if isinstance(lam, TailedPartition):
        return lam.excess()
    return sum(lam)


def add_box(lam: Parts, i: int, delta: int = 1) -> Parts:
    """lambda +- 1_i on a finite tuple, extending by zeros when i > len."""
    p = list(lam) + [0] * max(0, i - len(lam))
    p[i - 1] += delta
    return tuple(p)


def is_admissible(lam: Label, k: int, r: int) -> bool:
    """lambda_i - lambda_(i+k) >= r wherever both entries exist.

    Tailed partitions are checked on the prefix plus one tail period, which
    suffices because the tail itself meets the bound with equality.
    """
    if isinstance(lam, TailedPartition):
        n = lam.stab + k
        return all(lam.part(j) - lam.part(j + k) >= r for j in range(1, n + 1))
    return all(lam[j] - lam[j + k] >= r for j in range(len(lam) - k))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu <= lam in dominance order (partial sums), after zero padding."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance order compares partitions of equal weight")
    n = max(len(mu), len(lam))
    a = list(mu) + [0] * (n - len(mu))
    b = list(lam) + [0] * (n - len(lam))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def _graded_key(lam: Label):
    if isinstance(lam, TailedPartition):
        n = lam.stab
        return (lam.excess(), tuple(-x for x in lam.parts(n)))
    return (sum(lam), tuple(-x for x in lam))


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Parts]:
    """Partitions of n in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def enumerate_nonneg(max_weight: int, weight_eq: int | None = None, max_len: int | None = None) -> List[Parts]:
    ws = [weight_eq] if weight_eq is not None else range(max_weight + 1)
    return [p for w in ws for p in partitions_of(w, max_len=max_len)]


def enumerate_zvalued(N: int, lo: int, hi: int) -> List[Parts]:
    """Weakly decreasing length-N tuples with entries in [lo, hi]."""
    out: List[Parts] = []

    def rec(prefix, top):
        if len(prefix) == N:
            out.append(tuple(prefix))
            return
        for x in range(top, lo - 1, -1):
            rec(prefix + [x], x)

    rec([], hi)
    return sorted(out, key=_graded_key)


def enumerate_tailed(spec: TailSpec, max_excess: int) -> List[TailedPartition]:
    """Admissible labels lambda >= lambda0 with total excess <= max_excess.

    Admissibility against the tail forces d_j <= d_(j-k) for the excess
    d = lambda - lambda0, so the excess is supported on the first k*max_excess rows.
    """
    k, r = spec.k, spec.r
    n = max(1, k * max_excess)
    tail = spec.head(n + k)
    found = set()

    def rec(d: List[int], left: int):
        j = len(d) + 1
        if j > n:
            lam = TailedPartition(tuple(tail[i] + d[i] for i in range(n)), spec)
            if lam.is_weakly_decreasing() and is_admissible(lam, k, r):
                found.add(lam)
            return
        cap = left if j <= k else min(left, d[j - 1 - k])
        for x in range(cap + 1):
            rec(d + [x], left - x)

    rec([], max_excess)
    return sorted(found, key=_graded_key)


def enumerate_basis(kind: str, **bounds) -> List[Label]:
    """Dispatch: ``nonneg`` (weight or max_weight), ``zvalued`` (N, lo, hi), ``tailed`` (spec, max_excess)."""
    if kind == "nonneg":
        if "weight" in bounds:
            return enumerate_nonneg(bounds["weight"], weight_eq=bounds["weight"], max_len=bounds.get("max_len"))
        return enumerate_nonneg(bounds["max_weight"], max_len=bounds.get("max_len"))
    if kind == "zvalued":
        return enumerate_zvalued(bounds["N"], bounds["lo"], bounds["hi"])
    if kind == "tailed":
        return enumerate_tailed(bounds["spec"], bounds["max_excess"])
    raise ValueError(f"unknown partition kind {kind!r}")


def label_to_json(lam: Label):
    if isinstance(lam, TailedPartition):
        return lam.to_json()
    if isinstance(lam, int):
        return lam
    return list(lam)


def label_from_json(obj) -> Label:
    if isinstance(obj, dict):
        spec = TailSpec(obj["k"], obj["r"], tuple(obj.get("c", ())))
        return TailedPartition(tuple(obj["prefix"]), spec)
    if isinstance(obj, int):
        return obj
    return tuple(obj)


def dumps(lam: Label) -> str:
    return json.dumps(label_to_json(lam), separators=(",", ":"))
