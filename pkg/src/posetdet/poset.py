"""Finite posets, their incidence algebra, meets, and closure predicates."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .ring import Int, RingValue, ring_value_from_json, zero_like

# Exhaustive predicates below are O(n^3) or worse; keep instances small.
MAX_ELEMENTS = 64


class MeetError(ValueError):
    """A pair has no unique greatest lower bound."""


class Poset:
    """Finite partially ordered set on indices 0..n-1.

    The relation is validated at construction (reflexive, antisymmetric,
    transitive) and a fixed linear extension is computed so that matrix
    rows and columns are reproducible.
    """

    def __init__(
        self,
        leq: Sequence[Sequence[bool]],
        labels: Sequence[str] | None = None,
        host_map: tuple[int, ...] | None = None,
    ):
        n = len(leq)
        if n == 0:
            raise ValueError("poset needs at least one element")
        if n > MAX_ELEMENTS:
            raise ValueError(f"poset too large ({n} > {MAX_ELEMENTS})")
        rows = tuple(tuple(bool(x) for x in row) for row in leq)
        if any(len(row) != n for row in rows):
            raise ValueError("relation must be square")
        self.n = n
        self._leq = rows
        self._validate_partial_order()
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise ValueError("need one label per element")
        self.labels = tuple(str(x) for x in labels)
        self.host_map = host_map
        self._above = tuple(
            frozenset(b for b in range(n) if rows[a][b]) for a in range(n)
        )
        self._below = tuple(
            frozenset(a for a in range(n) if rows[a][b]) for b in range(n)
        )
        self.lin_ext = self._linear_extension()
        self._position = {e: i for i, e in enumerate(self.lin_ext)}
        self._meet_semilattice: bool | None = None

    def _validate_partial_order(self) -> None:
        n, leq = self.n, self._leq
        for a in range(n):
            if not leq[a][a]:
                raise ValueError("relation is not reflexive")
        for a in range(n):
            for b in range(n):
                if a != b and leq[a][b] and leq[b][a]:
                    raise ValueError("relation is not antisymmetric")
        for a in range(n):
            for b in range(n):
                if leq[a][b]:
                    for c in range(n):
                        if leq[b][c] and not leq[a][c]:
                            raise ValueError("relation is not transitive")

    def _linear_extension(self) -> tuple[int, ...]:
        # Repeatedly remove a minimal element, lowest index first, so the
        # output is deterministic.
        remaining = set(range(self.n))
        order = []
        while remaining:
            minimal = [
                e
                for e in remaining
                if all(x == e or not self._leq[x][e] for x in remaining)
            ]
            pick = min(minimal)
            order.append(pick)
            remaining.remove(pick)
        return tuple(order)

    @classmethod
    def from_covers(
        cls,
        n: int,
        covers: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Poset:
        """Poset whose order is the reflexive-transitive closure of covers.

        Raises ValueError when the covers contain a directed cycle.
        """
        covers = list(covers)
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover ({a}, {b}) out of range")
        adj = [set() for _ in range(n)]
        for a, b in covers:
            adj[a].add(b)
        reach = [set() for _ in range(n)]
        for start in range(n):
            stack = [start]
            seen = reach[start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        for a in range(n):
            if a in reach[a]:
                raise ValueError("covers contain a directed cycle")
        leq = [[a == b or b in reach[a] for b in range(n)] for a in range(n)]
        return cls(leq, labels=labels)

    def leq(self, a: int, b: int) -> bool:
        return b in self._above[a]

    def below(self, a: int) -> frozenset[int]:
        """All b with b <= a."""
        return self._below[a]

    def above(self, a: int) -> frozenset[int]:
        """All b with a <= b."""
        return self._above[a]

    def position(self, a: int) -> int:
        """Index of element a in the fixed linear extension."""
        return self._position[a]

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Hasse diagram arcs (a, b): a < b with nothing strictly between."""
        out = []
        for a in range(self.n):
            for b in self._above[a]:
                if b == a:
                    continue
                between = any(
                    c != a and c != b and self.leq(a, c) and self.leq(c, b)
                    for c in range(self.n)
                )
                if not between:
                    out.append((a, b))
        return sorted(out)

    def meet(self, a: int, b: int) -> int:
        """Greatest lower bound of a and b; MeetError when it is not unique."""
        common = self._below[a] & self._below[b]
        if not common:
            raise MeetError(
                f"{self.labels[a]} and {self.labels[b]} have no common lower bound"
            )
        maximal = [
            c
            for c in common
            if all(d == c or not self.leq(c, d) for d in common)
        ]
        if len(maximal) != 1:
            names = ", ".join(self.labels[c] for c in sorted(maximal))
            raise MeetError(
                f"{self.labels[a]} and {self.labels[b]} have maximal lower bounds {names}"
            )
        return maximal[0]

    def is_meet_semilattice(self) -> bool:
        """True when every pair of elements has a meet."""
        if self._meet_semilattice is None:
            result = True
            for a in range(self.n):
                for b in range(a + 1, self.n):
                    try:
                        self.meet(a, b)
                    except MeetError:
                        result = False
                        break
                if not result:
                    break
            self._meet_semilattice = result
        return self._meet_semilattice

    def is_lower_closed(self, subset: Iterable[int]) -> bool:
        """True when the subset is a lower order ideal."""
        s = set(subset)
        return all(self._below[a] <= s for a in s)

    def is_meet_closed(self, subset: Iterable[int]) -> bool:
        """True when the subset is closed under pairwise meets."""
        s = sorted(set(subset))
        for i, a in enumerate(s):
            for b in s[i:]:
                if self.meet(a, b) not in s:
                    return False
        return True

    def induced(self, subset: Iterable[int]) -> Poset:
        """Subposet on the given elements, ordered by this poset's linear
        extension so the inherited order of indices is itself a linear
        extension.  host_map records the original indices.
        """
        s = sorted(set(subset), key=self._position.get)
        if not s:
            raise ValueError("subset must be nonempty")
        leq = [[self.leq(a, b) for b in s] for a in s]
        return Poset(
            leq,
            labels=[self.labels[a] for a in s],
            host_map=tuple(s),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self._leq == other._leq
            and self.labels == other.labels
        )

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.cover_pairs()})"


def divisor_poset(values: Sequence[int]) -> Poset:
    """Poset on the given distinct positive integers ordered by divisibility."""
    vals = list(values)
    if not vals:
        raise ValueError("need at least one value")
    if any(v < 1 for v in vals):
        raise ValueError("values must be positive")
    if len(set(vals)) != len(vals):
        raise ValueError("values must be distinct")
    leq = [[b % a == 0 for b in vals] for a in vals]
    return Poset(leq, labels=[str(v) for v in vals])


class IncidenceFunction:
    """Map (a, b) -> ring value that vanishes unless a <= b in the host poset."""

    def __init__(
        self,
        host: Poset,
        values: Mapping[tuple[int, int], RingValue],
        zero: RingValue | None = None,
    ):
        self.host = host
        table = {}
        for (a, b), v in values.items():
            if not (0 <= a < host.n and 0 <= b < host.n):
                raise ValueError(f"entry ({a}, {b}) out of range")
            if not host.leq(a, b):
                raise ValueError(
                    f"entry on pair ({host.labels[a]}, {host.labels[b]}) without {host.labels[a]} <= {host.labels[b]}"
                )
            table[(a, b)] = v
        if zero is None:
            zero = zero_like(next(iter(table.values()))) if table else Int(0)
        for v in table.values():
            if type(v) is not type(zero):
                raise ValueError("incidence function values must share one ring tag")
        self.zero = zero
        self._table = table

    def __call__(self, a: int, b: int) -> RingValue:
        if not self.host.leq(a, b):
            return self.zero
        return self._table.get((a, b), self.zero)

    def items(self):
        return self._table.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceFunction) or self.host != other.host:
            return False
        pairs = set(self._table) | set(other._table)
        return all(self(a, b) == other(a, b) for a, b in pairs)


def zeta_function(p: Poset) -> IncidenceFunction:
    """Indicator of the order relation: 1 exactly when a <= b."""
    return IncidenceFunction(
        p, {(a, b): Int(1) for a in range(p.n) for b in p.above(a)}
    )


def delta_function(p: Poset) -> IncidenceFunction:
    """Identity of the incidence algebra: 1 exactly on the diagonal."""
    return IncidenceFunction(p, {(a, a): Int(1) for a in range(p.n)})


def mobius_function(p: Poset) -> IncidenceFunction:
    """Inverse of the zeta function in the incidence algebra.

    Computed by the defining recursion mu(a, a) = 1 and
    mu(a, b) = -sum of mu(a, c) over a <= c < b.
    """
    values: dict[tuple[int, int], Int] = {}
    for a in range(p.n):
        values[(a, a)] = Int(1)
        # Walk the interval above a in linear-extension order so every
        # mu(a, c) needed is already present.
        for b in sorted(p.above(a), key=p.position):
            if b == a:
                continue
            total = 0
            for c in p.above(a) & p.below(b):
                if c != b:
                    total += values[(a, c)].v
            values[(a, b)] = Int(-total)
    return IncidenceFunction(p, values)


def poset_to_dict(p: Poset) -> dict:
    """JSON-ready description with labels and Hasse covers."""
    return {
        "labels": list(p.labels),
        "covers": [list(c) for c in p.cover_pairs()],
    }


def poset_from_dict(doc: dict) -> Poset:
    """Inverse of poset_to_dict; the document schema used by the CLI."""
    if not isinstance(doc, dict) or "labels" not in doc or "covers" not in doc:
        raise ValueError('poset document needs "labels" and "covers"')
    labels = doc["labels"]
    covers = [tuple(c) for c in doc["covers"]]
    if any(len(c) != 2 for c in covers):
        raise ValueError("covers must be pairs")
    return Poset.from_covers(len(labels), covers, labels=labels)


def incidence_from_dict(p: Poset, doc: dict) -> IncidenceFunction:
    """Incidence function from {"entries": [[a, b, value], ...]}.

    A value is an integer or an ascending coefficient list.
    """
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValueError('incidence document needs "entries"')
    values = {}
    for entry in doc["entries"]:
        if len(entry) != 3:
            raise ValueError("each entry must be [a, b, value]")
        a, b, v = entry
        values[(a, b)] = ring_value_from_json(v)
    return IncidenceFunction(p, values)
