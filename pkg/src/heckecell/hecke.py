"""The Hecke algebra of the extended affine Weyl group over Z[q, q^-1].

T-basis arithmetic, the bar involution, the flat antiautomorphism, the
Kazhdan-Lusztig basis with its polynomials, structure constants in both
bases, and the degree bookkeeping of the separating-hyperplane bound.

The KL cache and the bar cache are the only shared mutable structures; a
single lock makes get-or-compute linearizable so sweeps may run from
threads.
"""

from __future__ import annotations

import threading
from itertools import combinations

from .laurent import LaurentPoly, xi
from .weyl import GroupElement, Weyl

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


class HeckeElt:
    """Finitely supported map GroupElement -> LaurentPoly, no zero values."""

    __slots__ = ("_d",)

    def __init__(self, d=None):
        self._d = {w: c for w, c in (d or {}).items() if c}

    def items(self):
        return self._d.items()

    def support(self):
        return self._d.keys()

    def coeff(self, w: GroupElement) -> LaurentPoly:
        return self._d.get(w, _ZERO)

    def is_zero(self) -> bool:
        return not self._d

    def __eq__(self, other):
        return isinstance(other, HeckeElt) and self._d == other._d

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        d = dict(self._d)
        for w, c in other._d.items():
            nc = d.get(w, _ZERO) + c
            if nc:
                d[w] = nc
            elif w in d:
                del d[w]
        out = HeckeElt.__new__(HeckeElt)
        out._d = d
        return out

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, a: LaurentPoly) -> "HeckeElt":
        if not a:
            return HeckeElt()
        out = HeckeElt.__new__(HeckeElt)
        out._d = {w: c * a for w, c in self._d.items()}
        return out

    def __len__(self):
        return len(self._d)

    def __repr__(self):
        return f"HeckeElt({len(self._d)} terms)"


class Hecke:
    """Algebra operations bound to one extended Weyl group."""

    def __init__(self, weyl: Weyl):
        self.weyl = weyl
        self.ws = weyl.ws
        self.xi = tuple(xi(p) for p in self.ws.params)
        self._lock = threading.RLock()
        self._bar_cache = {}
        self._kl_cache = {}

    # -- basic constructors ---------------------------------------------------

    def zero(self) -> HeckeElt:
        return HeckeElt()

    def unit(self) -> HeckeElt:
        return HeckeElt({self.weyl.identity: _ONE})

    def t(self, w: GroupElement) -> HeckeElt:
        return HeckeElt({w: _ONE})

    # -- multiplication ---------------------------------------------------------

    def mul_gen(self, side: str, i: int, h: HeckeElt) -> HeckeElt:
        """Multiply by T_{s_i} on the given side, term by term."""
        weyl = self.weyl
        xi_s = self.xi[i]
        d = {}
        left = side == "left"
        for w, c in h.items():
            sw = weyl.gen_mul_left(i, w) if left else weyl.gen_mul_right(w, i)
            if sw.length() > w.length():
                _acc(d, sw, c)
            else:
                _acc(d, sw, c)
                _acc(d, w, c * xi_s)
        return HeckeElt(d)

    def mul_pi(self, side: str, pi: GroupElement, h: HeckeElt) -> HeckeElt:
        weyl = self.weyl
        idx = weyl.pi_elements.index(pi)
        if side == "left":
            return HeckeElt({weyl.pi_mul_left(idx, w): c for w, c in h.items()})
        return HeckeElt({weyl.pi_mul_right(w, idx): c for w, c in h.items()})

    def mul_t_left(self, x: GroupElement, h: HeckeElt) -> HeckeElt:
        """T_x * h via a reduced word of x."""
        pi_idx, word = self.weyl.reduced_word(x)
        for i in reversed(word):
            h = self.mul_gen("left", i, h)
        pi = self.weyl.pi_elements[pi_idx]
        if not pi.is_identity():
            h = self.mul_pi("left", pi, h)
        return h

    def mul_t_right(self, h: HeckeElt, x: GroupElement) -> HeckeElt:
        pi_idx, word = self.weyl.reduced_word(x)
        pi = self.weyl.pi_elements[pi_idx]
        if not pi.is_identity():
            h = self.mul_pi("right", pi, h)
        for i in word:
            h = self.mul_gen("right", i, h)
        return h

    def mul(self, h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
        acc = {}
        for x, c in h1.items():
            for w, cc in self.mul_t_left(x, h2).items():
                _acc(acc, w, cc * c)
        return HeckeElt(acc)

    # -- involutions ---------------------------------------------------------------

    def bar_t(self, w: GroupElement) -> HeckeElt:
        """bar(T_w) = (T_{w^-1})^-1, cached and computed along a reduced word."""
        hit = self._bar_cache.get(w)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._bar_cache.get(w)
            if hit is not None:
                return hit
            pi_idx, word = self.weyl.reduced_word(w)
            if pi_idx:
                # bar(T_pi T_w') = T_pi bar(T_w')
                pi = self.weyl.pi_elements[pi_idx]
                out = self.mul_pi("left", pi, self.bar_t(pi.inverse() * w))
            elif not word:
                out = self.t(w)
            else:
                # bar(T_s T_rest) = (T_s - xi_s) bar(T_rest)
                i = word[0]
                tail = self.bar_t(self.weyl.from_word(0, word[1:]))
                out = self.mul_gen("left", i, tail) - tail.scale(self.xi[i])
            self._bar_cache[w] = out
            return out

    def bar(self, h: HeckeElt) -> HeckeElt:
        acc = {}
        for w, c in h.items():
            cb = c.bar()
            for y, cc in self.bar_t(w).items():
                _acc(acc, y, cc * cb)
        return HeckeElt(acc)

    def flat(self, h: HeckeElt) -> HeckeElt:
        """The antiautomorphism T_w -> T_{w^-1} (coefficients untouched)."""
        return HeckeElt({w.inverse(): c for w, c in h.items()})

    # -- Kazhdan-Lusztig basis --------------------------------------------------------

    def kl_basis(self, w: GroupElement) -> HeckeElt:
        """C_w: the unique bar-invariant element with C_w = T_w mod H_{<0}.

        Computed on the Bruhat interval below w: expand bar on the interval
        and solve the unitriangular system that pushes every coefficient
        below w into strictly negative degrees.
        """
        hit = self._kl_cache.get(w)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._kl_cache.get(w)
            if hit is not None:
                return hit
            # C_{pi w'} = T_pi C_{w'}: strip pi and shift afterwards.
            pi_idx = self.weyl.pi_index(w)
            if pi_idx:
                pi = self.weyl.pi_elements[pi_idx]
                base = self.kl_basis(pi.inverse() * w)
                out = self.mul_pi("left", pi, base)
                self._kl_cache[w] = out
                return out
            interval = sorted(self.weyl.bruhat_interval(w), key=self.weyl.sort_key)
            index = {y: j for j, y in enumerate(interval)}
            bar_rows = [self.bar_t(y) for y in interval]
            m = len(interval) - 1
            assert interval[m] == w
            coeffs = [_ZERO] * m + [_ONE]
            bars = [_ZERO] * m + [_ONE]
            for j in range(m - 1, -1, -1):
                d = _ZERO
                for i in range(j + 1, m + 1):
                    if bars[i]:
                        r = bar_rows[i].coeff(interval[j])
                        if r:
                            d = d + bars[i] * r
                # solve c - bar(c) = d with c strictly negative
                assert d.coeff(0) == 0, "bar matrix lost unitriangularity"
                coeffs[j] = d.negative_part()
                bars[j] = coeffs[j].bar()
            out = HeckeElt({y: c for y, c in zip(interval, coeffs) if c})
            self._kl_cache[w] = out
            return out

    def kl_polynomial(self, y: GroupElement, w: GroupElement) -> LaurentPoly:
        """P_{y,w}, with P_{w,w} = 1 and P = 0 unless y <= w."""
        if y == w:
            return _ONE
        return self.kl_basis(w).coeff(y)

    def kl_expand(self, h: HeckeElt) -> dict:
        """Coordinates of h in the KL basis, by descending elimination."""
        out = {}
        rest = dict(h.items())
        while rest:
            top = max(rest, key=self.weyl.sort_key)
            c = rest.pop(top)
            out[top] = c
            for w, pc in self.kl_basis(top).items():
                if w == top:
                    continue
                nc = rest.get(w, _ZERO) - c * pc
                if nc:
                    rest[w] = nc
                elif w in rest:
                    del rest[w]
        return out

    def from_kl(self, coords: dict) -> HeckeElt:
        out = HeckeElt()
        for w, c in coords.items():
            out = out + self.kl_basis(w).scale(c)
        return out

    # -- structure constants --------------------------------------------------------

    def h_constants(self, x: GroupElement, y: GroupElement) -> dict:
        """C_x C_y = sum h_{x,y,z} C_z."""
        prod = self.mul(self.kl_basis(x), self.kl_basis(y))
        return self.kl_expand(prod)

    def f_constants(self, x: GroupElement, y: GroupElement) -> dict:
        """T_x T_y = sum f_{x,y,z} T_z, by iterated generator multiplication."""
        return dict(self.mul_t_left(x, self.t(y)).items())

    def f_constants_subsets(self, x: GroupElement, y: GroupElement) -> dict:
        """The same constants by brute-force enumeration of the subset
        formula: subsets I of positions of a reduced word of x, kept when
        each deleted letter is a descent of the partial product, each
        contributing the product of its xi factors on T_{x_I y}.
        """
        weyl = self.weyl
        pi_idx, word = weyl.reduced_word(x)
        n = len(word)
        pi = weyl.pi_elements[pi_idx]
        out = {}
        for p in range(n + 1):
            for subset in combinations(range(n), p):
                omitted = set(subset)
                ok = True
                factor = _ONE
                cur = y
                # walk letters from the right end of the word
                for pos in range(n - 1, -1, -1):
                    s = weyl.gens[word[pos]]
                    if pos in omitted:
                        if (s * cur).length() >= cur.length():
                            ok = False
                            break
                        factor = factor * self.xi[word[pos]]
                    else:
                        cur = s * cur
                if ok:
                    _acc(out, pi * cur, factor)
        return {w: c for w, c in out.items() if c}

    def same_profile(self, x: GroupElement, y1: GroupElement, y2: GroupElement) -> bool:
        """Whether T_x T_y1 and T_x T_y2 share the association z -> a_z
        (z running over the left factors, terms T_{z y})."""
        return self._left_profile(x, y1) == self._left_profile(x, y2)

    def _left_profile(self, x: GroupElement, y: GroupElement) -> dict:
        y_inv = y.inverse()
        return {w * y_inv: c for w, c in self.f_constants(x, y).items()}

    # -- degree data -------------------------------------------------------------------

    def degree_data(self, x: GroupElement, y: GroupElement):
        """The separating-hyperplane sets H_{x,y}, I_{x,y} and the degree
        bound c_{x,y} = sum over directions of the max weight in H_{x,y}."""
        weyl = self.weyl
        a0 = weyl.alcove_of(weyl.identity)
        ay = weyl.alcove_of(y)
        axy = weyl.alcove_of(x * y)
        h_set = weyl.separating_hyperplanes(a0, ay) & weyl.separating_hyperplanes(ay, axy)
        c_per = {}
        for r_idx, k in h_set:
            root = self.ws.positive_roots[r_idx]
            w = root.level_weight(k)
            if c_per.get(r_idx, 0) < w:
                c_per[r_idx] = w
        return DegreeData(x, y, h_set, set(c_per), c_per, sum(c_per.values()))

    # -- cell preorder graphs --------------------------------------------------------------

    def cell_preorder_graph(self, bound: int):
        """Left/right/two-sided preorder edges among elements of length <=
        bound.  Truncated: valid for confirming relations, never refuting."""
        weyl = self.weyl
        nodes = list(weyl.enumerate_elements(bound))
        node_set = set(nodes)
        left = {w: set() for w in nodes}
        for y in nodes:
            for pi in weyl.pi_elements:
                z = pi * y
                if z in node_set:
                    left[y].add(z)
            for i in range(self.ws.num_gens):
                for z in self.h_constants(weyl.gens[i], y):
                    if z in node_set:
                        left[y].add(z)
        right = {w: set() for w in nodes}
        for y in nodes:
            yi = y.inverse()
            if yi not in node_set:
                continue
            for zi in left[yi]:
                z = zi.inverse()
                if z in node_set:
                    right[y].add(z)
        return PreorderGraph(nodes, left, right)


class DegreeData:
    __slots__ = ("x", "y", "h_set", "i_set", "c_per_alpha", "c")

    def __init__(self, x, y, h_set, i_set, c_per_alpha, c):
        self.x = x
        self.y = y
        self.h_set = h_set
        self.i_set = i_set
        self.c_per_alpha = c_per_alpha
        self.c = c


class PreorderGraph:
    """Bounded <=_L / <=_R edge sets with reachability queries."""

    def __init__(self, nodes, left, right):
        self.nodes = nodes
        self.left = left
        self.right = right

    def _reach(self, start, edges):
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for z in edges.get(w, ()):
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return seen

    def leq_left(self, z, y) -> bool:
        """z <=_L y on the truncated graph."""
        return z in self._reach(y, self.left)

    def leq_right(self, z, y) -> bool:
        return z in self._reach(y, self.right)

    def leq_two_sided(self, z, y) -> bool:
        both = {w: self.left.get(w, set()) | self.right.get(w, set()) for w in self.nodes}
        return z in self._reach(y, both)


def _acc(d: dict, w, c):
    nc = d.get(w, _ZERO) + c
    if nc:
        d[w] = nc
    elif w in d:
        del d[w]
