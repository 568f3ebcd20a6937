"""The extended affine Weyl group W_0 x| P in exact normal form.

An element is stored as the affine map x |-> x.u + lam on the weight
lattice (u in the finite Weyl group, lam in the L-weight lattice P).  The
map w |-> (its alcove A_0.w) identifies the group with the set of extended
alcoves, and length, descent sets and reduced words all come from the
closed-form hyperplane count on the normal form.

An independent alcove-walk oracle (exact rational base points, walking the
fixed generator reflections) is provided for cross-validation; production
code never depends on it.
"""

from __future__ import annotations

from fractions import Fraction

from .rootdata import WeightSystem


class GroupElement:
    """Element of the extended affine Weyl group, in normal form.

    finite is the index of the W_0-part in the weight-system table and
    translation is the vector of the affine map x |-> x.finite + translation.
    """

    __slots__ = (
        "weyl", "finite", "translation",
        "_hash", "_len", "_wlen", "_word", "_gl", "_gr",
    )

    def __init__(self, weyl, finite, translation):
        self.weyl = weyl
        self.finite = finite
        self.translation = translation
        self._hash = hash((finite, translation))
        self._len = None
        self._wlen = None
        self._word = None
        self._gl = None  # cache: generator/Pi products on the left
        self._gr = None  # cache: generator/Pi products on the right

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.finite == other.finite
            and self.translation == other.translation
        )

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.weyl.multiply(self, other)

    def inverse(self) -> "GroupElement":
        return self.weyl.inverse(self)

    def length(self) -> int:
        if self._len is None:
            self._len = self.weyl.length(self)
        return self._len

    def weight_length(self) -> int:
        if self._wlen is None:
            self._wlen = self.weyl.weight_length(self)
        return self._wlen

    def is_identity(self) -> bool:
        return self.finite == 0 and not any(self.translation)

    def __repr__(self):
        pi, word = self.weyl.reduced_word(self)
        head = f"pi^{pi}*" if pi else ""
        return f"<{head}{list(word)}>"


class Alcove:
    """An extended alcove, carried by an exact rational interior point."""

    __slots__ = ("weyl", "point", "pi_index")

    def __init__(self, weyl, point, pi_index=0):
        self.weyl = weyl
        self.point = tuple(point)
        self.pi_index = pi_index

    def __eq__(self, other):
        return (
            isinstance(other, Alcove)
            and self.pi_index == other.pi_index
            and self.weyl.alcove_floors(self.point) == other.weyl.alcove_floors(other.point)
        )

    def __hash__(self):
        return hash((self.pi_index, self.weyl.alcove_floors(self.point)))

    def __repr__(self):
        return f"Alcove(pi={self.pi_index}, point={self.point})"


class Weyl:
    """Group operations, generators, Pi, Bruhat order and the walk oracle."""

    def __init__(self, ws: WeightSystem):
        self.ws = ws
        n = ws.rank
        zero = (0,) * n
        self.identity = GroupElement(self, 0, zero)
        self._intern = {(0, zero): self.identity}

        # Generators indexed by the user labels 0..n.
        gens = [None] * ws.num_gens
        for k in range(n):
            mat_idx = ws.w0_index[self._simple_matrix(k)]
            gens[ws.simple_to_gen[k]] = self.element(mat_idx, zero)
        hcr = ws.highest_coroot_root
        aff_mat = self._reflection_matrix(hcr)
        gens[ws.affine_gen] = self.element(ws.w0_index[aff_mat], hcr.vector)
        self.gens = tuple(gens)

        self.base_point = self._fundamental_point()
        self._base_pairings = self._precompute_base_pairings()
        self._build_pi()
        self._leq_cache = {}

    # -- raw construction helpers -------------------------------------------

    def _simple_matrix(self, k):
        ws = self.ws
        n = ws.rank
        alpha = ws.simple_roots[k].vector
        return tuple(
            tuple((1 if r == c else 0) - (1 if r == k else 0) * alpha[c] for c in range(n))
            for r in range(n)
        )

    def _reflection_matrix(self, root):
        ws = self.ws
        n = ws.rank
        return tuple(
            tuple((1 if r == c else 0) - root.covector[r] * root.vector[c] for c in range(n))
            for r in range(n)
        )

    def _fundamental_point(self):
        """Barycenter of A_0: exact rational interior point."""
        ws = self.ws
        m = ws.highest_coroot_root.covector
        n = ws.rank
        return tuple(Fraction(1, m[j] * (n + 1)) for j in range(n))

    def _precompute_base_pairings(self):
        ws = self.ws
        out = []
        for u in range(ws.w0_size):
            mat = ws.w0_mats[u]
            pt = tuple(
                sum(self.base_point[k] * mat[k][c] for k in range(ws.rank))
                for c in range(ws.rank)
            )
            out.append(tuple(
                sum(pt[i] * r.covector[i] for i in range(ws.rank))
                for r in ws.positive_roots
            ))
        return out

    def _build_pi(self):
        """Length-zero elements: the stabilizer of A_0, isomorphic to P/Q."""
        ws = self.ws
        pts = self.base_point
        candidates = []
        for u in range(ws.w0_size):
            img = tuple(
                sum(pts[k] * ws.w0_mats[u][k][c] for k in range(ws.rank))
                for c in range(ws.rank)
            )
            lam = tuple(p - q for p, q in zip(pts, img))
            if all(x.denominator == 1 for x in lam):
                lam_i = tuple(int(x) for x in lam)
                if ws.in_lattice(lam_i):
                    candidates.append(self.element(u, lam_i))
        candidates.sort(key=lambda g: g.translation)
        assert len(candidates) == ws.pi_order, "Pi does not match P/Q"
        self.pi_elements = tuple(candidates)
        self._pi_by_class = {
            ws.coset_key(g.translation): i for i, g in enumerate(self.pi_elements)
        }
        # Permutation of generator indices induced by each pi.
        perms = []
        for g in self.pi_elements:
            gi = self.inverse(g)
            perm = []
            for s in self.gens:
                img = self.multiply(self.multiply(g, s), gi)
                perm.append(self.gens.index(img))
            perms.append(tuple(perm))
        self.pi_gen_permutations = tuple(perms)

    # -- group arithmetic ----------------------------------------------------

    def element(self, finite: int, translation) -> GroupElement:
        key = (finite, tuple(translation))
        g = self._intern.get(key)
        if g is None:
            g = GroupElement(self, finite, key[1])
            self._intern[key] = g
        return g

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if a.weyl is not b.weyl or a.weyl is not self:
            raise ValueError("elements belong to different weight systems")
        ws = self.ws
        u = ws.w0_mult[a.finite][b.finite]
        lam = tuple(
            x + y for x, y in zip(ws.act(a.translation, b.finite), b.translation)
        )
        return self.element(u, lam)

    def inverse(self, a: GroupElement) -> GroupElement:
        ws = self.ws
        ui = ws.w0_inv[a.finite]
        lam = tuple(-x for x in ws.act(a.translation, ui))
        return self.element(ui, lam)

    def gen_mul_left(self, i: int, w: GroupElement) -> GroupElement:
        """s_i * w through a per-element cache (elements are interned)."""
        d = w._gl
        if d is None:
            d = w._gl = {}
        g = d.get(i)
        if g is None:
            g = d[i] = self.multiply(self.gens[i], w)
        return g

    def gen_mul_right(self, w: GroupElement, i: int) -> GroupElement:
        d = w._gr
        if d is None:
            d = w._gr = {}
        g = d.get(i)
        if g is None:
            g = d[i] = self.multiply(w, self.gens[i])
        return g

    def pi_mul_left(self, pi_idx: int, w: GroupElement) -> GroupElement:
        d = w._gl
        if d is None:
            d = w._gl = {}
        key = -1 - pi_idx
        g = d.get(key)
        if g is None:
            g = d[key] = self.multiply(self.pi_elements[pi_idx], w)
        return g

    def pi_mul_right(self, w: GroupElement, pi_idx: int) -> GroupElement:
        d = w._gr
        if d is None:
            d = w._gr = {}
        key = -1 - pi_idx
        g = d.get(key)
        if g is None:
            g = d[key] = self.multiply(w, self.pi_elements[pi_idx])
        return g

    def translation(self, lam) -> GroupElement:
        """The element p_lam, for lam in the L-weight lattice."""
        return self.element(0, self.ws.check_lattice(lam))

    def finite_element(self, u: int) -> GroupElement:
        return self.element(u, (0,) * self.ws.rank)

    @property
    def longest_finite(self) -> GroupElement:
        return self.finite_element(self.ws.longest_index)

    # -- length and weight ----------------------------------------------------

    def _root_shift(self, w: GroupElement, root):
        """c such that the alcove of w has pairings in (c, c+1) with root."""
        ws = self.ws
        c = ws.pairing(w.translation, root)
        ui = ws.w0_inv[w.finite]
        _, sign = ws.w0_root_action[ui][root.index]
        return c - (1 if sign < 0 else 0)

    def length(self, w: GroupElement) -> int:
        total = 0
        for root in self.ws.positive_roots:
            total += abs(self._root_shift(w, root))
        return total

    def weight_length(self, w: GroupElement) -> int:
        """L(w): sum of hyperplane weights over all walls crossed."""
        total = 0
        for root in self.ws.positive_roots:
            c = self._root_shift(w, root)
            if c >= 1:
                lo, hi = 1, c
            elif c <= -1:
                lo, hi = c + 1, 0
            else:
                continue
            evens = hi // 2 - (lo - 1) // 2
            total += evens * root.even_weight + (hi - lo + 1 - evens) * root.odd_weight
        return total

    def gen_weight(self, i: int) -> int:
        return self.ws.params[i]

    # -- descents and words ----------------------------------------------------

    def descent(self, w: GroupElement, i: int, side: str) -> bool:
        if side == "left":
            return self.gen_mul_left(i, w).length() < w.length()
        if side == "right":
            return self.gen_mul_right(w, i).length() < w.length()
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def pi_index(self, w: GroupElement) -> int:
        return self._pi_by_class[self.ws.coset_key(w.translation)]

    def pi_part(self, w: GroupElement) -> GroupElement:
        return self.pi_elements[self.pi_index(w)]

    def reduced_word(self, w: GroupElement):
        """(pi index, word): w = pi * s_{i_1} ... s_{i_k}, lexicographically
        smallest word, k = l(w)."""
        if w._word is not None:
            return w._word
        pi_idx = self.pi_index(w)
        cur = self.multiply(self.inverse(self.pi_elements[pi_idx]), w)
        letters = []
        clen = cur.length()
        while clen > 0:
            for i in range(self.ws.num_gens):
                nxt = self.gen_mul_left(i, cur)
                if nxt.length() < clen:
                    letters.append(i)
                    cur, clen = nxt, nxt.length()
                    break
            else:
                raise AssertionError("no descent found below nonzero length")
        w._word = (pi_idx, tuple(letters))
        return w._word

    def from_word(self, pi_idx: int, word) -> GroupElement:
        g = self.pi_elements[pi_idx]
        for i in word:
            g = g * self.gens[i]
        return g

    def sort_key(self, w: GroupElement):
        pi_idx, word = self.reduced_word(w)
        return (w.length(), word, pi_idx)

    # -- Bruhat order ------------------------------------------------------------

    def bruhat_leq(self, x: GroupElement, y: GroupElement) -> bool:
        """Extended Bruhat order: Pi-parts must agree, W_a-parts compare."""
        if self.pi_index(x) != self.pi_index(y):
            return False
        pi_inv = self.inverse(self.pi_part(x))
        return self._leq(pi_inv * x, pi_inv * y)

    def _leq(self, x: GroupElement, y: GroupElement) -> bool:
        if x == y:
            return True
        lx, ly = x.length(), y.length()
        if lx >= ly:
            return False
        key = (x, y)
        hit = self._leq_cache.get(key)
        if hit is not None:
            return hit
        for i in range(self.ws.num_gens):
            ys = self.gen_mul_right(y, i)
            if ys.length() < ly:
                xs = self.gen_mul_right(x, i)
                res = self._leq(xs, ys) if xs.length() < lx else self._leq(x, ys)
                self._leq_cache[key] = res
                return res
        raise AssertionError("unreachable")

    def bruhat_interval(self, w: GroupElement):
        """All y <= w, via subword products of one reduced word of w."""
        pi_idx, word = self.reduced_word(w)
        pi = self.pi_elements[pi_idx]
        layer = {self.identity}
        for i in word:
            layer |= {self.gen_mul_right(g, i) for g in layer}
        return {pi * g for g in layer}

    # -- enumeration ---------------------------------------------------------------

    def enumerate_elements(self, bound: int):
        """All w with l(w) <= bound, each once, sorted by (length, word, Pi)."""
        if bound < 0:
            raise ValueError("bound must be >= 0")
        seen = {self.identity}
        frontier = [self.identity]
        for target in range(1, bound + 1):
            nxt = []
            for w in frontier:
                for i in range(self.ws.num_gens):
                    g = self.gen_mul_left(i, w)
                    if g.length() == target and g not in seen:
                        seen.add(g)
                        nxt.append(g)
            frontier = nxt
        out = [pi * w for w in seen for pi in self.pi_elements]
        out.sort(key=self.sort_key)
        for w in out:
            yield w

    # -- alcoves and the walk oracle --------------------------------------------

    def alcove_of(self, w: GroupElement) -> Alcove:
        ws = self.ws
        pi_idx = self.pi_index(w)
        wa = self.multiply(self.inverse(self.pi_elements[pi_idx]), w)
        mat = ws.w0_mats[wa.finite]
        pt = tuple(
            sum(self.base_point[k] * mat[k][c] for k in range(ws.rank)) + wa.translation[c]
            for c in range(ws.rank)
        )
        return Alcove(self, pt, pi_idx)

    def point_pairing(self, point, root) -> Fraction:
        return sum(Fraction(point[i]) * root.covector[i] for i in range(self.ws.rank))

    def alcove_floors(self, point):
        """Per-root floor of the pairing: identifies the alcove of the point."""
        return tuple(
            _floor(self.point_pairing(point, r)) for r in self.ws.positive_roots
        )

    def element_pairing_interval(self, w: GroupElement, root):
        """The open unit interval (c, c+1) of pairings of w's alcove."""
        c = self._root_shift(w, root)
        return c

    def alcove_walk(self, word, pi_idx: int = 0) -> Alcove:
        """Walk the faces named by the word, starting from A_0.

        Cross-validation oracle only: applies the fixed generator
        reflections to the rational base point, in word order.
        """
        pt = self.base_point
        for i in word:
            s = self.gens[i]
            mat = self.ws.w0_mats[s.finite]
            pt = tuple(
                sum(pt[k] * mat[k][c] for k in range(self.ws.rank)) + s.translation[c]
                for c in range(self.ws.rank)
            )
        return Alcove(self, pt, pi_idx)

    def separating_hyperplanes(self, a: Alcove, b: Alcove):
        """All (root index, level) strictly separating the two alcoves."""
        out = set()
        for r in self.ws.positive_roots:
            pa = self.point_pairing(a.point, r)
            pb = self.point_pairing(b.point, r)
            lo, hi = (pa, pb) if pa < pb else (pb, pa)
            k = _floor(lo) + 1
            while k < hi:
                if k > lo:
                    out.add((r.index, k))
                k += 1
        return out

    def separating_count(self, a: Alcove, b: Alcove) -> int:
        return len(self.separating_hyperplanes(a, b))

    # -- hyperplane weight via face-type transport --------------------------------

    def locate(self, target):
        """The element g with target inside the alcove A_0.g (walk by walls)."""
        ws = self.ws
        cur = self.base_point
        g = self.identity
        target = tuple(Fraction(t) for t in target)
        for _ in range(10000):
            crossings = []
            for r in ws.positive_roots:
                a = self.point_pairing(cur, r)
                b = self.point_pairing(target, r)
                if b == a:
                    continue
                # first integer level crossed by the segment cur -> target;
                # interior points never sit on a hyperplane, so a is not an
                # integer and floor gives the adjacent levels on both sides
                k = _floor(a) + 1 if b > a else _floor(a)
                if not (min(a, b) < Fraction(k) < max(a, b)):
                    continue
                t = (Fraction(k) - a) / (b - a)
                crossings.append((t, r, k))
            if not crossings:
                return g
            t0, r0, k0 = min(crossings, key=lambda c: c[0])
            # reflect the current point across H_{r0,k0}; track the element
            c = self.point_pairing(cur, r0) - k0
            cur = tuple(
                cur[j] - c * r0.vector[j] for j in range(ws.rank)
            )
            refl = self.element(
                ws.w0_index[self._reflection_matrix(r0)],
                tuple(k0 * v for v in r0.vector),
            )
            g = g * refl
        raise RuntimeError("alcove walk did not terminate")

    def wall_images(self, g: GroupElement):
        """Images of the walls of A_0 under g, each as (root index, level),
        tagged with the generator index whose face they carry."""
        ws = self.ws
        walls = [(ws.simple_roots[k], 0, ws.simple_to_gen[k]) for k in range(ws.rank)]
        walls.append((ws.highest_coroot_root, 1, ws.affine_gen))
        out = []
        for root, level, gen_idx in walls:
            tgt, sign = ws.w0_root_action[g.finite][root.index]
            cov = ws.positive_roots[tgt].covector
            shift = sum(g.translation[i] * cov[i] for i in range(ws.rank))
            out.append(((tgt, sign * level + shift), gen_idx))
        return out

    def hyperplane_weight(self, root_index: int, k: int) -> int:
        """L_H for H_{alpha,k}, read from the face type of an adjacent alcove.

        Picks a generic point on H, steps epsilon off it on either side,
        locates those alcoves by an exact walk, and transports the shared
        face back to a wall of A_0; the generator type found there gives
        the weight.  Independent of the per-family weight table.
        """
        ws = self.ws
        root = ws.positive_roots[root_index]
        denom = ws.pairing(root.vector, root)
        eps = Fraction(1, 2 * 997 * 1009 * max(denom, 1))
        for jiggle in range(1, 40):
            probe = tuple(jiggle * c for c in _generic_point(ws.rank))
            shift = Fraction(k) - self.point_pairing(probe, root)
            on_h = tuple(
                p + shift * Fraction(v, denom) for p, v in zip(probe, root.vector)
            )
            # on_h must be generic on H: away from every other hyperplane
            ok = True
            for r in ws.positive_roots:
                if r.index == root_index:
                    continue
                pr = self.point_pairing(on_h, r)
                margin = eps * abs(ws.pairing(root.vector, r)) + eps
                if abs(pr - Fraction(_round(pr))) <= margin:
                    ok = False
                    break
            if not ok:
                continue
            for side in (-1, 1):
                base = tuple(
                    p + side * eps * Fraction(v, denom)
                    for p, v in zip(on_h, root.vector)
                )
                g = self.locate(base)
                for (tgt, lvl), gen_idx in self.wall_images(g):
                    if tgt == root_index and lvl == k:
                        return ws.params[gen_idx]
        raise AssertionError("no adjacent alcove face found on the hyperplane")


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _round(x: Fraction) -> int:
    return _floor(x + Fraction(1, 2))


def _generic_point(rank: int):
    primes = (997, 1009, 1013, 1019)
    return tuple(Fraction(1, primes[i]) for i in range(rank))
