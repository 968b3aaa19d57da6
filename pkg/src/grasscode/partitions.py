"""Integer partitions: the index set for symmetric polynomials and zonal bases.

Canonical ordering everywhere in the package: by size ascending, then
lexicographically descending on the parts, so degree-2 partitions come out
as (2) before (1,1) and the full order starts (), (1), (2), (1,1), (3), ...
"""

from itertools import product


class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("parts",)

    def __init__(self, *parts):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError("negative part in %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts not weakly decreasing: %r" % (parts,))
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __repr__(self):
        return "Partition%r" % (self.parts,)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def contains(self, other):
        "does self contain other cell-wise (other_i <= self_i for all i)?"
        if len(other) > len(self):
            return False
        return all(other.parts[i] <= self.parts[i] for i in range(len(other)))

    def pad(self, length):
        "parts as a list padded with zeros to the given length"
        if length < len(self.parts):
            raise ValueError("cannot pad %r to length %d" % (self, length))
        return list(self.parts) + [0] * (length - len(self.parts))

    def sort_key(self):
        "key implementing the canonical order: size asc, then lex desc"
        return (self.size, tuple(-p for p in self.parts))


def aspartition(mu):
    "coerce an int tuple/list/Partition to Partition"
    if isinstance(mu, Partition):
        return mu
    if isinstance(mu, int):
        return Partition(mu)
    return Partition(tuple(mu))


def partitions_of(k, max_len=None, max_part=None):
    """All partitions of k with at most max_len parts, parts <= max_part.

    Yielded in lexicographically descending order.
    """
    if max_part is None:
        max_part = k
    if max_len is None:
        max_len = k

    def rec(rem, biggest, room):
        if rem == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rem, biggest), 0, -1):
            for rest in rec(rem - first, first, room - 1):
                yield (first,) + rest

    for parts in rec(k, max_part, max_len):
        yield Partition(parts)


def partitions_up_to(t, max_len=None):
    """All partitions of size <= t with at most max_len parts, canonical order."""
    out = []
    for k in range(t + 1):
        out.extend(partitions_of(k, max_len=max_len))
    return out


def subpartitions(kappa):
    """All partitions sigma contained in kappa, any size, canonical order."""
    kappa = aspartition(kappa)
    seen = set()
    for tup in product(*(range(p + 1) for p in kappa.parts)):
        trimmed = tuple(t for t in tup if t > 0)
        if all(trimmed[i] >= trimmed[i + 1] for i in range(len(trimmed) - 1)):
            seen.add(trimmed)
    out = [Partition(t) for t in seen]
    out.sort(key=Partition.sort_key)
    return out
