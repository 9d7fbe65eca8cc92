"""Indexed element arithmetic shared by the lattice and isomorphism engines.

A :class:`GroupView` numbers the elements of a finite group 0..n-1 and
exposes multiplication, inverses, element orders, conjugacy classes and
subgroup closures on those indices.  Views come in two flavours: backed by
a multiplication table (abstract groups) or by a sorted list of
permutations (subgroups of a symmetric group).  Small permutation-backed
views materialize Cayley rows lazily so hot loops run on plain ints.
"""

from __future__ import annotations

import weakref
from array import array

from .perms import compose, inverse, pad256, perm_order

CAYLEY_LIMIT = 2048


class GroupView:
    __slots__ = (
        "size",
        "identity",
        "elements",
        "_index",
        "_table",
        "_rows",
        "_pads",
        "_inv",
        "_orders",
        "_gens",
        "_classes",
        "_class_of",
        "_fingerprints",
        "_invariant",
    )

    def __init__(self):
        self.size = 0
        self.identity = 0
        self.elements = None  # permutation-backed views only
        self._index = None
        self._table = None
        self._rows = None
        self._pads = None
        self._inv = None
        self._orders = None
        self._gens = None
        self._classes = None
        self._class_of = None
        self._fingerprints = None
        self._invariant = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_table(cls, table) -> "GroupView":
        v = cls()
        v.size = len(table)
        v.identity = 0
        v._table = table
        return v

    @classmethod
    def from_perm_elements(cls, elements, identity_perm) -> "GroupView":
        v = cls()
        els = sorted(elements)
        v.size = len(els)
        v.elements = els
        v._index = {p: i for i, p in enumerate(els)}
        v.identity = v._index[identity_perm]
        if els and isinstance(els[0], bytes):
            v._pads = [pad256(p) for p in els]
        if v.size <= CAYLEY_LIMIT:
            v._rows = [None] * v.size
        return v

    @classmethod
    def from_perm_group(cls, G) -> "GroupView":
        from .perms import identity as id_perm

        v = cls.from_perm_elements(G.elements(), id_perm(G.degree))
        v._gens = tuple(v._index[g] for g in G.generators)
        return v

    # -- multiplication ----------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        if self._rows is not None:
            row = self._rows[i]
            if row is None:
                row = self._build_row(i)
            return row[j]
        return self._mul_direct(i, j)

    def _mul_direct(self, i, j):
        if self._pads is not None:
            return self._index[self.elements[j].translate(self._pads[i])]
        return self._index[compose(self.elements[i], self.elements[j])]

    def _build_row(self, i):
        if self._pads is not None:
            pad = self._pads[i]
            idx = self._index
            row = array("i", [idx[q.translate(pad)] for q in self.elements])
        else:
            row = array("i", [self._mul_direct(i, j) for j in range(self.size)])
        self._rows[i] = row
        return row

    def inv(self, i: int) -> int:
        invs = self._inv
        if invs is None:
            invs = self._inv = array("i", [-1]) * self.size
        v = invs[i]
        if v >= 0:
            return v
        if self.elements is not None:
            v = self._index[inverse(self.elements[i])]
        else:
            e = self.identity
            row = self._table[i]
            v = row.index(e)
        invs[i] = v
        return v

    def pow(self, i: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(i), -k)
        result = self.identity
        base = i
        while k:
            if k & 1:
                result = self.mul(base, result)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def order_of(self, i: int) -> int:
        orders = self.element_orders()
        return orders[i]

    def element_orders(self):
        if self._orders is None:
            if self.elements is not None:
                self._orders = array("i", [perm_order(p) for p in self.elements])
            else:
                out = array("i", [0]) * self.size
                for i in range(self.size):
                    k = 1
                    x = i
                    while x != self.identity:
                        x = self.mul(i, x)
                        k += 1
                    out[i] = k
                self._orders = out
        return self._orders

    # -- generators ---------------------------------------------------------

    def generators(self) -> tuple:
        """A small generating sequence (greedy, by descending element order)."""
        if self._gens is None:
            self._gens = self.greedy_generators(range(self.size))
        return self._gens

    def greedy_generators(self, subset) -> tuple:
        orders = self.element_orders()
        pool = sorted(subset, key=lambda i: (-orders[i], i))
        target = len(pool)
        gens = []
        have = {self.identity}
        for x in pool:
            if x in have:
                continue
            gens.append(x)
            have = self.closure(gens)
            if len(have) == target:
                break
        return tuple(gens)

    def closure(self, seed, maxsize=None) -> frozenset | None:
        """Subgroup generated by ``seed``; None if maxsize is exceeded."""
        els = {self.identity}
        gens = [g for g in seed if g != self.identity]
        els.update(gens)
        frontier = list(els)
        mul = self.mul
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = mul(g, x)
                    if y not in els:
                        els.add(y)
                        new.append(y)
                        if maxsize is not None and len(els) > maxsize:
                            return None
            frontier = new
        return frozenset(els)

    # -- conjugation ----------------------------------------------------------

    def conjugation_map(self, g: int):
        """Array m with m[x] = g x g^{-1}."""
        gi = self.inv(g)
        mul = self.mul
        return array("i", [mul(self.mul(g, x), gi) for x in range(self.size)])

    def conj_classes(self):
        """Conjugacy classes under the whole group, via the generators."""
        if self._classes is None:
            maps = [self.conjugation_map(g) for g in self.generators()]
            class_of = array("i", [-1]) * self.size
            classes = []
            for i in range(self.size):
                if class_of[i] >= 0:
                    continue
                cid = len(classes)
                orbit = [i]
                class_of[i] = cid
                pos = 0
                while pos < len(orbit):
                    x = orbit[pos]
                    pos += 1
                    for m in maps:
                        y = m[x]
                        if class_of[y] < 0:
                            class_of[y] = cid
                            orbit.append(y)
                classes.append(tuple(sorted(orbit)))
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self):
        self.conj_classes()
        return self._class_of

    def fingerprints(self):
        """Per-element invariant (order, conjugacy class size), preserved by
        any isomorphism between whole groups."""
        if self._fingerprints is None:
            orders = self.element_orders()
            classes = self.conj_classes()
            class_of = self._class_of
            sizes = [len(c) for c in classes]
            self._fingerprints = [
                (orders[i], sizes[class_of[i]]) for i in range(self.size)
            ]
        return self._fingerprints

    # -- structural helpers -----------------------------------------------

    def centralizer_elements(self, x: int) -> list[int]:
        mul = self.mul
        return [g for g in range(self.size) if mul(g, x) == mul(x, g)]

    def center_size(self) -> int:
        mul = self.mul
        gens = self.generators()
        count = 0
        for x in range(self.size):
            if all(mul(g, x) == mul(x, g) for g in gens):
                count += 1
        return count

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def derived_subgroup_of(self, subgroup: frozenset, gens=None) -> frozenset:
        """Derived subgroup of a subgroup given by its element set."""
        if gens is None:
            gens = self.greedy_generators(subgroup)
        seed = {self.commutator(a, b) for a in gens for b in gens}
        seed.discard(self.identity)
        current = self.closure(seed)
        # normal closure inside the subgroup
        while True:
            extra = set()
            for g in gens:
                gi = self.inv(g)
                for x in current:
                    y = self.mul(self.mul(g, x), gi)
                    if y not in current:
                        extra.add(y)
            if not extra:
                return current
            current = self.closure(set(current) | extra)

    def perfect_residual(self, subgroup: frozenset) -> frozenset:
        current = subgroup
        while True:
            nxt = self.derived_subgroup_of(current)
            if nxt == current:
                return current
            current = nxt

    def is_solvable(self) -> bool:
        whole = frozenset(range(self.size))
        return len(self.perfect_residual(whole)) == 1

    def subgroup_order_histogram(self, subgroup) -> tuple:
        orders = self.element_orders()
        counts = {}
        for i in subgroup:
            counts[orders[i]] = counts.get(orders[i], 0) + 1
        return tuple(sorted(counts.items()))

    def invariant_vector(self) -> tuple:
        """(order, element-order histogram, class-size multiset,
        derived-subgroup order, center order): cheap isomorphism invariants."""
        if self._invariant is None:
            whole = frozenset(range(self.size))
            hist = self.subgroup_order_histogram(whole)
            class_sizes = tuple(sorted(len(c) for c in self.conj_classes()))
            derived = len(self.derived_subgroup_of(whole, self.generators()))
            self._invariant = (self.size, hist, class_sizes, derived, self.center_size())
        return self._invariant


_VIEW_CACHE: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def view_of(G) -> GroupView:
    """Cached GroupView for an immutable PermGroup."""
    v = _VIEW_CACHE.get(G)
    if v is None:
        v = GroupView.from_perm_group(G)
        _VIEW_CACHE[G] = v
    return v
