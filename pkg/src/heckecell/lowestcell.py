"""The lowest two-sided cell: box, coset representatives, factorization,
relative Kazhdan-Lusztig polynomials and the P-elements.

The cell consists of the elements factoring as z . p_tau . w_0 . z'^-1 with
z, z' in the finite box B_0 and tau dominant, all lengths additive.  The
box is found by a wall-crossing search; membership and factorization run a
finite search over B_0 so that uniqueness is an observable fact rather
than an assumption.

Relative KL polynomials are computed on the abstract module with basis
indexed by the minimal coset representatives X_0, using the three-case
generator action; no C_{w_0 y} is ever expanded, which is also what makes
the y-independence of the construction meaningful to test.
"""

from __future__ import annotations

from .hecke import Hecke, HeckeElt, _acc
from .laurent import LaurentPoly
from .weyl import GroupElement

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


class CellFactorization:
    """The unique triple (z, tau, z') with w = z . p_tau . w_0 . z'^-1."""

    __slots__ = ("z", "tau", "zprime")

    def __init__(self, z: GroupElement, tau, zprime: GroupElement):
        self.z = z
        self.tau = tuple(tau)
        self.zprime = zprime

    def __eq__(self, other):
        return (
            isinstance(other, CellFactorization)
            and self.z == other.z
            and self.tau == other.tau
            and self.zprime == other.zprime
        )

    def __hash__(self):
        return hash((self.z, self.tau, self.zprime))

    def __repr__(self):
        return f"CellFactorization(z={self.z}, tau={self.tau}, zprime={self.zprime})"


class NotInLowestCell(ValueError):
    pass


class BoundExceeded(RuntimeError):
    """An operation hit support outside its stated length bound."""


class LowestCell:
    def __init__(self, hecke: Hecke):
        self.hecke = hecke
        self.weyl = hecke.weyl
        self.ws = hecke.ws
        self._b0 = None
        self._relkl_cache = {}
        self._relkl_cache_r = {}

    # -- the box B_0 -----------------------------------------------------------

    def _in_box(self, point) -> bool:
        ws = self.ws
        for k in range(ws.rank):
            v = self.weyl.point_pairing(point, ws.simple_roots[k])
            if not (0 < v < ws.b[k]):
                return False
        return True

    def box_elements(self):
        """B_0: all extended elements whose alcove lies in the b-box."""
        if self._b0 is not None:
            return self._b0
        weyl = self.weyl
        seen = {weyl.identity}
        frontier = [weyl.identity]
        found = [weyl.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in weyl.gens:
                    g = s * w
                    if g in seen:
                        continue
                    seen.add(g)
                    if self._in_box(weyl.alcove_of(g).point):
                        found.append(g)
                        nxt.append(g)
            frontier = nxt
        out = []
        for pi in weyl.pi_elements:
            out.extend(pi * w for w in found)
        out.sort(key=weyl.sort_key)
        self._b0 = tuple(out)
        return self._b0

    def in_box(self, z: GroupElement) -> bool:
        pi = self.weyl.pi_part(z)
        wa = pi.inverse() * z
        return self._in_box(self.weyl.alcove_of(wa).point)

    # -- coset representatives ---------------------------------------------------

    def is_in_x0(self, x: GroupElement) -> bool:
        """Minimal-length representative of x W_0: no finite right descent."""
        lx = x.length()
        for k in range(self.ws.rank):
            s = self.weyl.gens[self.ws.simple_to_gen[k]]
            if (x * s).length() < lx:
                return False
        return True

    def is_in_x0_inv(self, y: GroupElement) -> bool:
        ly = y.length()
        for k in range(self.ws.rank):
            s = self.weyl.gens[self.ws.simple_to_gen[k]]
            if (s * y).length() < ly:
                return False
        return True

    def x0_part(self, w: GroupElement):
        """(x, v) with w = x . v, x in X_0, v in W_0, lengths additive."""
        v = self.weyl.identity
        while True:
            lw = w.length()
            for k in range(self.ws.rank):
                s = self.weyl.gens[self.ws.simple_to_gen[k]]
                if (w * s).length() < lw:
                    w = w * s
                    v = s * v
                    break
            else:
                return w, v

    def x0_elements_below(self, x: GroupElement):
        """{x' in X_0 : x' <= x}, sorted."""
        out = [y for y in self.weyl.bruhat_interval(x) if self.is_in_x0(y)]
        out.sort(key=self.weyl.sort_key)
        return out

    # -- membership and factorization ----------------------------------------------

    def descend_to_lowest(self, z: GroupElement) -> GroupElement:
        """w_0 . z, reached by the left-multiplication ascent."""
        while True:
            lz = z.length()
            for k in range(self.ws.rank):
                s = self.weyl.gens[self.ws.simple_to_gen[k]]
                if (s * z).length() > lz:
                    z = s * z
                    break
            else:
                return z

    def _factorizations(self, w: GroupElement):
        weyl = self.weyl
        ws = self.ws
        w0 = weyl.longest_finite
        lw, lw0 = w.length(), w0.length()
        out = []
        for zp in self.box_elements():
            u = w * zp
            if u.length() != lw - zp.length():
                continue
            x = u * w0
            if x.length() != u.length() - lw0 or not self.is_in_x0(x):
                continue
            for z in self.box_elements():
                if z.finite != x.finite:
                    continue
                p = weyl.inverse(z) * x
                if p.finite != 0:
                    continue
                mu = p.translation
                if not ws.in_lattice(mu) or not ws.is_dominant(mu):
                    continue
                if x.length() != z.length() + weyl.translation(mu).length():
                    continue
                out.append(CellFactorization(z, mu, zp))
        return out

    def membership(self, w: GroupElement) -> bool:
        return bool(self._factorizations(w))

    def factorize(self, w: GroupElement) -> CellFactorization:
        """The unique (z, tau, z') with w = z . p_tau . w_0 . z'^-1 additive."""
        found = self._factorizations(w)
        if not found:
            raise NotInLowestCell(f"{w!r} is not in the lowest two-sided cell")
        if len(found) > 1:
            raise AssertionError(f"factorization of {w!r} is not unique: {found}")
        return found[0]

    def assemble(self, z: GroupElement, tau, zprime: GroupElement) -> GroupElement:
        weyl = self.weyl
        return z * weyl.translation(tau) * weyl.longest_finite * weyl.inverse(zprime)

    def cell_elements(self, length_bound: int):
        """All cell members with length <= bound (by enumeration + test)."""
        return [
            w for w in self.weyl.enumerate_elements(length_bound) if self.membership(w)
        ]

    # -- relative KL polynomials ------------------------------------------------------

    def relative_kl(self, x: GroupElement) -> dict:
        """The family x' -> p_{x',x} over x' in X_0 making
        T_x C_{w_0 y} + sum p_{x',x} T_{x'} C_{w_0 y} bar-invariant.

        Runs on the abstract module with basis X_0; the three generator
        cases are the transition rules, so no y enters anywhere.
        """
        hit = self._relkl_cache.get(x)
        if hit is not None:
            return hit
        if not self.is_in_x0(x):
            raise ValueError(f"{x!r} is not a minimal coset representative")
        basis = self.x0_elements_below(x)
        rows = [self._module_bar(y) for y in basis]
        m = len(basis) - 1
        assert basis[m] == x
        coeffs = [_ZERO] * m + [_ONE]
        for j in range(m - 1, -1, -1):
            d = _ZERO
            for i in range(j + 1, m + 1):
                if coeffs[i]:
                    r = rows[i].get(basis[j])
                    if r:
                        d = d + coeffs[i].bar() * r
            assert d.coeff(0) == 0
            coeffs[j] = d.negative_part()
        # strictly lower part only; the leading coefficient 1 is implicit
        out = {y: c for y, c in zip(basis[:-1], coeffs[:-1]) if c}
        self._relkl_cache[x] = out
        return out

    def _module_bar(self, y: GroupElement) -> dict:
        """bar(T_y C) projected to the X_0 module: expand bar(T_y) and push
        each T_{x v} to q^{L(v)} T_x."""
        ws = self.ws
        out = {}
        for w, c in self.hecke.bar_t(y).items():
            x, v = self.x0_part(w)
            _acc(out, x, c * LaurentPoly.q_power(ws.finite_weight(v.finite)))
        return out

    def relative_kl_right(self, x: GroupElement) -> dict:
        """Right-handed family x' -> p^r_{x',x} over x' in X_0^-1 (the
        mirrored module C_{z w_0} T_x), computed independently of flat."""
        hit = self._relkl_cache_r.get(x)
        if hit is not None:
            return hit
        if not self.is_in_x0_inv(x):
            raise ValueError(f"{x!r} is not a minimal right-coset representative")
        basis = [y for y in self.weyl.bruhat_interval(x) if self.is_in_x0_inv(y)]
        basis.sort(key=self.weyl.sort_key)
        ws = self.ws
        rows = []
        for y in basis:
            row = {}
            for w, c in self.hecke.bar_t(y).items():
                # mirrored projection: w = v . x' with v finite
                x_part, v = self._right_coset_part(w)
                _acc(row, x_part, c * LaurentPoly.q_power(ws.finite_weight(v.finite)))
            rows.append(row)
        m = len(basis) - 1
        assert basis[m] == x
        coeffs = [_ZERO] * m + [_ONE]
        for j in range(m - 1, -1, -1):
            d = _ZERO
            for i in range(j + 1, m + 1):
                if coeffs[i]:
                    r = rows[i].get(basis[j])
                    if r:
                        d = d + coeffs[i].bar() * r
            assert d.coeff(0) == 0
            coeffs[j] = d.negative_part()
        out = {y: c for y, c in zip(basis[:-1], coeffs[:-1]) if c}
        self._relkl_cache_r[x] = out
        return out

    def _right_coset_part(self, w: GroupElement):
        """(y, v) with w = v . y, v in W_0, y minimal in W_0 w."""
        v = self.weyl.identity
        while True:
            lw = w.length()
            for k in range(self.ws.rank):
                s = self.weyl.gens[self.ws.simple_to_gen[k]]
                if (s * w).length() < lw:
                    w = s * w
                    v = v * s
                    break
            else:
                return w, v

    # -- the P elements -------------------------------------------------------------

    def p_element(self, z: GroupElement) -> HeckeElt:
        """P(z) = T_z + sum p_{x,z} T_x for z in B_0."""
        if not self.in_box(z):
            raise ValueError(f"{z!r} is not in the box B_0")
        return self._p_from(z)

    def p_element_omega(self, omega) -> HeckeElt:
        """P(omega) for a fundamental L-weight omega."""
        omega = tuple(omega)
        if omega not in self.ws.fundamental_weights:
            raise ValueError(f"{omega} is not a fundamental L-weight")
        return self._p_from(self.weyl.translation(omega))

    def _p_from(self, x: GroupElement) -> HeckeElt:
        d = {y: c for y, c in self.relative_kl(x).items()}
        d[x] = _ONE
        return HeckeElt(d)

    def p_element_right(self, x: GroupElement) -> HeckeElt:
        """P_R(x) for x in B_0^-1 or x = p_omega^-1, right-handed route."""
        d = {y: c for y, c in self.relative_kl_right(x).items()}
        d[x] = _ONE
        return HeckeElt(d)

    def p_element_tau(self, tau) -> HeckeElt:
        """P(tau): ordered product of the P(omega_i), ascending index."""
        tau = tuple(tau)
        if not (self.ws.in_lattice(tau) and self.ws.is_dominant(tau)):
            raise ValueError(f"{tau} is not a dominant L-weight")
        out = self.hecke.unit()
        for i, fw in enumerate(self.ws.fundamental_weights):
            count = tau[i] // self.ws.b[i]
            if count:
                p = self.p_element_omega(fw)
                for _ in range(count):
                    out = self.hecke.mul(out, p)
        return out

    # -- the ideals -----------------------------------------------------------------

    def in_n_y(self, w: GroupElement, y: GroupElement) -> bool:
        """w in N_y = {x . w_0 . y : x in X_0}."""
        weyl = self.weyl
        w0 = weyl.longest_finite
        u = w * weyl.inverse(y)
        if u.length() != w.length() - y.length():
            return False
        x = u * w0
        return x.length() == u.length() - w0.length() and self.is_in_x0(x)

    def in_n_r_z(self, w: GroupElement, z: GroupElement) -> bool:
        """w in N^R_z = {z . w_0 . x : x in X_0^-1}."""
        weyl = self.weyl
        w0 = weyl.longest_finite
        u = weyl.inverse(z) * w
        if u.length() != w.length() - z.length():
            return False
        x = w0 * u
        return x.length() == u.length() - w0.length() and self.is_in_x0_inv(x)

    def in_m_plus_index(self, w: GroupElement):
        """If w = p_tau . w_0 with tau dominant, return tau, else None."""
        ws = self.ws
        w0 = self.weyl.longest_finite
        if w.finite != w0.finite:
            return None
        tau = ws.act(w.translation, ws.w0_inv[w0.finite])
        if ws.in_lattice(tau) and ws.is_dominant(tau):
            return tau
        return None

    def ideal_membership(self, h: HeckeElt, which: str, param=None, length_bound=None):
        """Express h in the KL sub-basis of the named ideal.

        which: "M_y" (param: y in B_0^-1), "M_R_z" (param: z in B_0),
        "M_plus" or "M_0".  Returns (True, coefficients) or
        (False, residual) where the residual is the first KL term whose
        index falls outside the ideal.  Raises BoundExceeded when the
        support leaves the stated length bound.
        """
        tests = {
            "M_y": lambda w: self.in_n_y(w, param),
            "M_R_z": lambda w: self.in_n_r_z(w, param),
            "M_plus": lambda w: self.in_m_plus_index(w) is not None,
            "M_0": self.membership,
        }
        if which not in tests:
            raise ValueError(f"unknown ideal {which!r}")
        if length_bound is not None:
            over = max((w.length() for w in h.support()), default=0)
            if over > length_bound:
                raise BoundExceeded(f"support length {over} exceeds bound {length_bound}")
        test = tests[which]
        coords = {}
        rest = h
        while not rest.is_zero():
            top = max(rest.support(), key=self.weyl.sort_key)
            if not test(top):
                return False, rest
            c = rest.coeff(top)
            coords[top] = c
            rest = rest - self.hecke.kl_basis(top).scale(c)
        return True, coords
