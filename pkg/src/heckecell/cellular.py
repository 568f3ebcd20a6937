"""The affine-cellular layer: the coefficient algebra A[P+], the bilinear
form phi, the isomorphism onto the lowest two-sided ideal, and the
decomposition of the cellular basis in the Kazhdan-Lusztig basis.

All universally quantified claims are exposed as bounded sweeps; callers
name the length bound and the sweep is exact within it.

Index conventions.  The product P(tau) C_{w_0} decomposes over the
Kazhdan-Lusztig elements C_{p_tau' w_0} with tau' dominant; profiles are
keyed by -tau', which is what matches the antidominant path model in type
A.  In the per-factor decomposition P(omega) C_{w_0 p_lam} the computed
keys alpha (from terms C_{p_alpha w_0 p_lam}) satisfy lam - nu(alpha)
antidominant; the involution nu enters because p_alpha w_0 p_lam =
p_{alpha + lam.w_0} w_0.
"""

from __future__ import annotations

from .hecke import HeckeElt
from .laurent import LaurentPoly
from .lowestcell import BoundExceeded, LowestCell
from .weyl import GroupElement

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


class MonoidAlgebraElt:
    """Element of A[P+]: finite map from dominant weights to LaurentPoly."""

    __slots__ = ("_d",)

    def __init__(self, d=None):
        self._d = {t: c for t, c in (d or {}).items() if c}

    def items(self):
        return self._d.items()

    def coeff(self, tau) -> LaurentPoly:
        return self._d.get(tuple(tau), _ZERO)

    def is_zero(self) -> bool:
        return not self._d

    def __add__(self, other):
        d = dict(self._d)
        for t, c in other._d.items():
            nc = d.get(t, _ZERO) + c
            if nc:
                d[t] = nc
            elif t in d:
                del d[t]
        return MonoidAlgebraElt(d)

    def __mul__(self, other):
        d = {}
        for t1, c1 in self._d.items():
            for t2, c2 in other._d.items():
                t = tuple(a + b for a, b in zip(t1, t2))
                nc = d.get(t, _ZERO) + c1 * c2
                if nc:
                    d[t] = nc
                elif t in d:
                    del d[t]
        return MonoidAlgebraElt(d)

    def scale(self, a: LaurentPoly):
        return MonoidAlgebraElt({t: c * a for t, c in self._d.items()})

    def __eq__(self, other):
        return isinstance(other, MonoidAlgebraElt) and self._d == other._d

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __repr__(self):
        return f"MonoidAlgebraElt({self._d!r})"


class CellularElt:
    """Element of the twisted matrix algebra: finite map
    (z, tau, z') -> LaurentPoly over basis v_z (x) e^tau (x) v_{z'}."""

    __slots__ = ("_d",)

    def __init__(self, d=None):
        self._d = {k: c for k, c in (d or {}).items() if c}

    @staticmethod
    def basis(z: GroupElement, tau, zprime: GroupElement) -> "CellularElt":
        return CellularElt({(z, tuple(tau), zprime): _ONE})

    def items(self):
        return self._d.items()

    def is_zero(self) -> bool:
        return not self._d

    def __add__(self, other):
        d = dict(self._d)
        for k, c in other._d.items():
            nc = d.get(k, _ZERO) + c
            if nc:
                d[k] = nc
            elif k in d:
                del d[k]
        return CellularElt(d)

    def scale(self, a: LaurentPoly):
        return CellularElt({k: c * a for k, c in self._d.items()})

    def __eq__(self, other):
        return isinstance(other, CellularElt) and self._d == other._d

    def __repr__(self):
        return f"CellularElt({len(self._d)} terms)"


class CellularStructure:
    """length_bound, when set, turns runaway inputs into BoundExceeded
    errors instead of long computations; sweeps state their own bounds."""

    def __init__(self, lowest: LowestCell, length_bound=None):
        self.lowest = lowest
        self.hecke = lowest.hecke
        self.weyl = lowest.weyl
        self.ws = lowest.ws
        self.length_bound = length_bound
        self._phi_cache = {}
        self._phi_image_cache = {}
        self._phi_image_kl_cache = {}
        self._ptau_kl_cache = {}

    def _check_bound(self, w) -> None:
        if self.length_bound is not None and w.length() > self.length_bound:
            raise BoundExceeded(
                f"element of length {w.length()} exceeds bound {self.length_bound}")

    # -- the bilinear form ------------------------------------------------------

    def phi_form(self, z: GroupElement, zprime: GroupElement) -> MonoidAlgebraElt:
        """phi(v_z, v_{z'}): coefficients of C_{w_0 z^-1} C_{z' w_0} in the
        basis {P(tau) C_{w_0}} of M_+.

        Both subscripts are length-additive (z^-1 on the right of w_0, z'
        on the left), which is what keeps the product inside M_+ and what
        the isomorphism's composition law needs.
        """
        key = (z, zprime)
        hit = self._phi_cache.get(key)
        if hit is not None:
            return hit
        weyl, hecke = self.weyl, self.hecke
        w0 = weyl.longest_finite
        if self.length_bound is not None:
            total = (w0 * z.inverse()).length() + (zprime * w0).length()
            if total > self.length_bound:
                raise BoundExceeded(
                    f"product support bound {total} exceeds {self.length_bound}")
        prod = hecke.mul(
            hecke.kl_basis(w0 * z.inverse()),
            hecke.kl_basis(zprime * w0),
        )
        coords = hecke.kl_expand(prod)
        out = {}
        while coords:
            top = max(coords, key=weyl.sort_key)
            tau = self.lowest.in_m_plus_index(top)
            if tau is None:
                raise AssertionError(f"product left M_+ at {top!r}")
            c = coords[top]
            out[tau] = c
            for w, pc in self._ptau_kl(tau).items():
                nc = coords.get(w, _ZERO) - c * pc
                if nc:
                    coords[w] = nc
                elif w in coords:
                    del coords[w]
        result = MonoidAlgebraElt(out)
        self._phi_cache[key] = result
        return result

    def _ptau_kl(self, tau) -> dict:
        """KL coordinates of P(tau) C_{w_0}, cached per tau."""
        tau = tuple(tau)
        hit = self._ptau_kl_cache.get(tau)
        if hit is None:
            w0 = self.weyl.longest_finite
            h = self.hecke.mul(self.lowest.p_element_tau(tau), self.hecke.kl_basis(w0))
            hit = self.hecke.kl_expand(h)
            self._ptau_kl_cache[tau] = hit
        return hit

    def phi_matrix(self) -> dict:
        """The full matrix of phi over the B_0 basis."""
        b0 = self.lowest.box_elements()
        return {(z, zp): self.phi_form(z, zp) for z in b0 for zp in b0}

    # -- the twisted product and the isomorphism ------------------------------------

    def cellular_mul(self, a: CellularElt, b: CellularElt) -> CellularElt:
        out = CellularElt()
        for (zi, tau, zj), ca in a.items():
            for (zk, tau2, zl), cb in b.items():
                mid = self.phi_form(zj, zk)
                if mid.is_zero():
                    continue
                c = ca * cb
                terms = {}
                for sigma, cphi in mid.items():
                    t = tuple(x + y + z for x, y, z in zip(tau, sigma, tau2))
                    terms[(zi, t, zl)] = cphi * c
                out = out + CellularElt(terms)
        return out

    def phi_image_basis(self, z: GroupElement, tau, zprime: GroupElement) -> HeckeElt:
        """Phi(v_z (x) e^tau (x) v_{z'}) = P(z) P(tau) C_{w_0} P_R(z'^-1)."""
        key = (z, tuple(tau), zprime)
        hit = self._phi_image_cache.get(key)
        if hit is None:
            hecke, lowest = self.hecke, self.lowest
            w0 = self.weyl.longest_finite
            h = hecke.mul(lowest.p_element_tau(key[1]), hecke.kl_basis(w0))
            h = hecke.mul(lowest.p_element(z), h)
            h = hecke.mul(h, hecke.flat(lowest.p_element(zprime)))
            self._phi_image_cache[key] = hit = h
        return hit

    def phi_iso(self, a: CellularElt) -> HeckeElt:
        out = self.hecke.zero()
        for (z, tau, zp), c in a.items():
            out = out + self.phi_image_basis(z, tau, zp).scale(c)
        return out

    def phi_inverse(self, h: HeckeElt) -> CellularElt:
        """Inverse of the isomorphism on elements of the lowest ideal.

        Peels the Bruhat-top KL coordinate, reads its cell factorization as
        the basis triple, and subtracts that basis image; unitriangularity
        makes this terminate exactly.  Raises if h is not in the span.
        """
        out = {}
        coords = self.hecke.kl_expand(h)
        while coords:
            top = max(coords, key=self.weyl.sort_key)
            f = self.lowest.factorize(top)
            key = (f.z, f.tau, f.zprime)
            c = coords[top]
            out[key] = out.get(key, _ZERO) + c
            for w, pc in self._phi_image_kl(key).items():
                nc = coords.get(w, _ZERO) - c * pc
                if nc:
                    coords[w] = nc
                elif w in coords:
                    del coords[w]
        return CellularElt(out)

    def _phi_image_kl(self, key) -> dict:
        hit = self._phi_image_kl_cache.get(key)
        if hit is None:
            hit = self.hecke.kl_expand(self.phi_image_basis(*key))
            self._phi_image_kl_cache[key] = hit
        return hit

    def cell_involution(self, a: CellularElt) -> CellularElt:
        """v (x) b (x) w  |->  w (x) nu(b) (x) v."""
        return CellularElt(
            {(zp, self.ws.nu(tau), z): c for (z, tau, zp), c in a.items()}
        )

    def involution_check(self, a: CellularElt) -> bool:
        """Whether flat(Phi(a)) == Phi(w (x) nu(b) (x) v applied to a)."""
        return self.hecke.flat(self.phi_iso(a)) == self.phi_iso(self.cell_involution(a))

    def basis_triples(self, length_bound: int):
        """All (z, tau, z') whose reassembled element has length <= bound."""
        weyl, lowest = self.weyl, self.lowest
        out = []
        w0len = weyl.longest_finite.length()
        b0 = lowest.box_elements()
        for z in b0:
            for zp in b0:
                rest = length_bound - w0len - z.length() - zp.length()
                if rest < 0:
                    continue
                for tau in self.dominant_weights_up_to(rest):
                    w = lowest.assemble(z, tau, zp)
                    if w.length() <= length_bound:
                        out.append((z, tau, zp))
        out.sort(key=lambda t: (self.weyl.sort_key(self.lowest.assemble(*t))))
        return out

    def dominant_weights_up_to(self, length_budget: int):
        """Dominant lattice weights tau with l(p_tau) <= budget."""
        ws, weyl = self.ws, self.weyl
        out = []
        frontier = [(0,) * ws.rank]
        seen = {(0,) * ws.rank}
        while frontier:
            nxt = []
            for tau in frontier:
                if weyl.translation(tau).length() <= length_budget:
                    out.append(tau)
                    for fw in ws.fundamental_weights:
                        t2 = tuple(a + b for a, b in zip(tau, fw))
                        if t2 not in seen:
                            seen.add(t2)
                            nxt.append(t2)
            frontier = nxt
        return sorted(out)

    # -- decomposition in the KL basis -----------------------------------------------

    def decompose_P_omega(self, omega, lam) -> dict:
        """Coefficients a_alpha of P(omega) C_{w_0 p_lam} over the
        C_{p_alpha w_0 p_lam}; the leading alpha = omega has coefficient 1
        and every coefficient is an integer."""
        ws, weyl, hecke = self.ws, self.weyl, self.hecke
        lam = ws.check_lattice(lam)
        if not ws.is_antidominant(lam):
            raise ValueError(f"{lam} is not antidominant")
        w0 = weyl.longest_finite
        base = w0 * weyl.translation(lam)
        self._check_bound(weyl.translation(tuple(omega)) * base)
        prod = hecke.mul(self.lowest.p_element_omega(omega), hecke.kl_basis(base))
        coords = hecke.kl_expand(prod)
        out = {}
        shift = weyl.translation(tuple(-x for x in lam))
        for w, c in coords.items():
            g = w * shift * w0
            if g.finite != 0:
                raise AssertionError(f"unexpected KL term {w!r} in P(omega)C_{{w_0 p_lam}}")
            if not c.is_integer():
                raise AssertionError(f"non-integer coefficient {c} at {w!r}")
            out[g.translation] = c.as_integer()
        assert out.get(tuple(omega)) == 1
        return out

    def decompose_P_tau(self, tau) -> dict:
        """Integer profile of P(tau) C_{w_0} over the KL basis of M_+.

        Keys are lam = -tau' for the terms C_{p_tau' w_0}; the iteration
        applies decompose_P_omega factor by factor.
        """
        ws = self.ws
        tau = ws.check_lattice(tau)
        if not ws.is_dominant(tau):
            raise ValueError(f"{tau} is not dominant")
        self._check_bound(self.weyl.translation(tau) * self.weyl.longest_finite)
        profile = {(0,) * ws.rank: 1}  # keyed by dominant tau' during iteration
        for i, fw in enumerate(ws.fundamental_weights):
            for _ in range(tau[i] // ws.b[i]):
                nxt = {}
                for tp, mult in profile.items():
                    lam_lit = tuple(-x for x in ws.nu(tp))
                    fam = self.decompose_P_omega(fw, lam_lit)
                    for alpha, a in fam.items():
                        key = tuple(x + y for x, y in zip(tp, alpha))
                        if not ws.is_dominant(key):
                            raise AssertionError(f"profile left the dominant cone at {key}")
                        nxt[key] = nxt.get(key, 0) + mult * a
                profile = {k: v for k, v in nxt.items() if v}
        return {tuple(-x for x in k): v for k, v in profile.items()}

    # -- interval geometry for the reduction ------------------------------------------

    def m_alpha(self, omega, root_index: int) -> int:
        """max over x <= p_omega and v in W_0 of the deepest level of a
        hyperplane of the given direction separating A_0 from x v A_0."""
        ws, weyl = self.ws, self.weyl
        root = ws.positive_roots[root_index]
        p = weyl.translation(tuple(omega))
        best = 0
        for x in weyl.bruhat_interval(p):
            for u in range(ws.w0_size):
                g = x * weyl.finite_element(u)
                c = weyl.element_pairing_interval(g, root)
                val = c if c >= 1 else (-(c + 1) if c <= -1 else 0)
                if val > best:
                    best = val
        return best

    def m_alpha_bound(self, omega) -> int:
        return max(self.m_alpha(omega, r.index) for r in self.ws.positive_roots)

    def reduce_lambda(self, lam, omega) -> tuple:
        """A lattice antidominant lam' in the small box, agreeing with lam
        on every coordinate that is not omega-far from its wall, with
        T_{p_omega} T_{v p_lam} ~ T_{p_omega} T_{v p_lam'} for all v.

        Clamps every simple coordinate at -K b_i with K the max of
        m_alpha(omega) over all positive roots; any root involving a
        clamped coordinate is then far for both weights, and all other
        pairings are unchanged, which is exactly the split the
        wall-crossing comparison needs.
        """
        ws = self.ws
        lam = ws.check_lattice(lam)
        if not ws.is_antidominant(lam):
            raise ValueError(f"{lam} is not antidominant")
        k = self.m_alpha_bound(omega)
        return tuple(max(c, -k * b) for c, b in zip(lam, ws.b))
