"""Finitely presented modules over A = k[x_1..x_n]/J.

A module is R^g modulo a relation submodule that always contains J*e_i for
every generator, so A-linearity is explicit. Module Groebner bases use a
position-over-term order (position primary, earlier positions larger). The
module Buchberger loop skips no pairs: with every S-pair processed, the
zero-reduction bookkeeping yields generators of the full syzygy module of the
inputs (each tracked element carries its expression on the inputs, so a
reduction to zero is literally a syzygy).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (ImageNotInKernel, MapNotWellDefined, NotZeroDimensional,
                     RingMismatch, SaturationCapExceeded)
from .groebner import GroebnerBasis, buchberger, krull_dimension
from .polyring import INFINITE, Monomial, Polynomial, RingSpec

SATURATION_CAP = 64


class ModuleVector:
    """Element of a free module R^g, stored as a tuple of polynomials."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        for c in comps[1:]:
            if c.field != comps[0].field or c.nvars != comps[0].nvars:
                raise RingMismatch("vector components from different rings")
        self.components = comps

    @classmethod
    def zero(cls, field, nvars, rank):
        return cls(tuple(Polynomial.zero(field, nvars) for _ in range(rank)))

    @classmethod
    def unit(cls, field, nvars, rank, i, poly=None):
        if poly is None:
            poly = Polynomial.one(field, nvars)
        return cls(tuple(poly if j == i else Polynomial.zero(field, nvars)
                         for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def field(self):
        return self.components[0].field

    @property
    def nvars(self):
        return self.components[0].nvars

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return ModuleVector(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        return ModuleVector(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return ModuleVector(tuple(-a for a in self.components))

    def scale(self, poly: Polynomial) -> "ModuleVector":
        return ModuleVector(tuple(poly * a for a in self.components))

    def mul_term(self, mon: Monomial, coeff) -> "ModuleVector":
        return ModuleVector(tuple(a.mul_term(mon, coeff) for a in self.components))

    def lead(self, order):
        """Leading (position, monomial, coefficient) under position-over-term."""
        for i, c in enumerate(self.components):
            if not c.is_zero():
                m, s = c.lead(order)
                return i, m, s
        raise ValueError("the zero vector has no leading term")

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def to_str(self, ring: RingSpec) -> str:
        return "[" + ", ".join(ring.poly_to_str(c) for c in self.components) + "]"

    def __repr__(self):
        return f"ModuleVector(rank {self.rank})"


def unit_vectors(ring: RingSpec, rank: int):
    return [ModuleVector.unit(ring.field, ring.nvars, rank, i) for i in range(rank)]


def _single(field, nvars, rank, pos, mon, coeff):
    return ModuleVector.unit(field, nvars, rank, pos,
                             Polynomial.term(field, nvars, mon, coeff))


def _mv_reduce(v, reducers, meta, order, with_cofactors=False):
    """Full normal form of a vector against reducers (vector, pos, lm, lc).

    Returns (remainder, cofactors) with v = sum(cof[i]*reducers[i]) + remainder.
    """
    field, nvars, rank = v.field, v.nvars, v.rank
    cof = [Polynomial.zero(field, nvars) for _ in reducers] if with_cofactors else None
    rem = ModuleVector.zero(field, nvars, rank)
    work = v
    while not work.is_zero():
        p, m, c = work.lead(order)
        for j, g in enumerate(reducers):
            gp, gm, gc = meta[j]
            if gp == p and gm.divides(m):
                q, qc = m.div(gm), c / gc
                work = work - g.mul_term(q, qc)
                if with_cofactors:
                    cof[j] = cof[j] + Polynomial.term(field, nvars, q, qc)
                break
        else:
            t = _single(field, nvars, rank, p, m, c)
            rem = rem + t
            work = work - t
    return rem, cof


def _module_buchberger(ring: RingSpec, vectors, rank, track=False):
    """Buchberger over R^rank, processing every same-position pair.

    With track=True each basis element carries its expression on the inputs;
    reductions to zero then hand back syzygies of the inputs directly, and
    together they generate the whole syzygy module because no pair is skipped.
    """
    order = ring.order
    field, nvars = ring.field, ring.nvars
    s = len(vectors)
    G, meta, reps, syz = [], [], [], []
    for i, v in enumerate(vectors):
        if v.rank != rank:
            raise RingMismatch("vector of wrong rank")
        if v.is_zero():
            if track:
                syz.append(ModuleVector.unit(field, nvars, s, i))
            continue
        G.append(v)
        meta.append(v.lead(order))
        if track:
            reps.append(ModuleVector.unit(field, nvars, s, i))

    pairs = {(a, b) for a in range(len(G)) for b in range(a + 1, len(G))
             if meta[a][0] == meta[b][0]}

    def pair_key(ab):
        a, b = ab
        lcm = meta[a][1].lcm(meta[b][1])
        return (lcm.degree, order.key(lcm), a, b)

    while pairs:
        a, b = min(pairs, key=pair_key)
        pairs.discard((a, b))
        pa, ma, ca = meta[a]
        _, mb, cb = meta[b]
        lcm = ma.lcm(mb)
        ua, ub = lcm.div(ma), lcm.div(mb)
        sv = G[a].mul_term(ua, ca.inverse()) - G[b].mul_term(ub, cb.inverse())
        r, cofs = _mv_reduce(sv, G, meta, order, with_cofactors=track)
        combo = None
        if track:
            combo = reps[a].mul_term(ua, ca.inverse()) - reps[b].mul_term(ub, cb.inverse())
            for j, q in enumerate(cofs):
                if not q.is_zero():
                    combo = combo - reps[j].scale(q)
        if r.is_zero():
            if track and not combo.is_zero():
                syz.append(combo)
        else:
            G.append(r)
            meta.append(r.lead(order))
            if track:
                reps.append(combo)
            new = len(G) - 1
            pairs.update((k, new) for k in range(new) if meta[k][0] == meta[new][0])
    return G, syz


def _pot_key(order, pos, mon):
    return (-pos, order.key(mon))


def _reduce_module_basis(G, order):
    if not G:
        return ()
    basis = []
    for g in sorted(G, key=lambda v: _pot_key(order, *v.lead(order)[:2])):
        _, _, c = g.lead(order)
        g = g.mul_term(Monomial.one(g.nvars), c.inverse())
        p, m, _ = g.lead(order)
        if not any(hp == p and hm.divides(m)
                   for hp, hm in (h.lead(order)[:2] for h in basis)):
            basis.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            meta = [h.lead(order) for h in others]
            r, _ = _mv_reduce(basis[i], others, meta, order)
            _, _, c = r.lead(order)
            r = r.mul_term(Monomial.one(r.nvars), c.inverse())
            if r != basis[i]:
                basis[i] = r
                changed = True
    basis.sort(key=lambda v: _pot_key(order, *v.lead(order)[:2]))
    return tuple(basis)


@dataclass(frozen=True)
class ModuleGB:
    """Reduced module Groebner basis inside R^rank."""

    ring: RingSpec
    rank: int
    generators: tuple

    def normal_form(self, v: ModuleVector, with_cofactors=False):
        if self.rank == 0:
            return (v, []) if with_cofactors else v
        order = self.ring.order
        meta = [g.lead(order) for g in self.generators]
        r, cof = _mv_reduce(v, list(self.generators), meta, order,
                            with_cofactors=with_cofactors)
        return (r, cof) if with_cofactors else r

    def contains(self, v: ModuleVector) -> bool:
        return self.normal_form(v).is_zero()


def module_gb(ring: RingSpec, vectors, rank: int) -> ModuleGB:
    """Reduced module GB of the given vectors plus J*e_i for every position."""
    vecs = list(vectors)
    for q in ring.quotient:
        for i in range(rank):
            vecs.append(ModuleVector.unit(ring.field, ring.nvars, rank, i, q))
    G, _ = _module_buchberger(ring, vecs, rank)
    return ModuleGB(ring, rank, _reduce_module_basis(G, ring.order))


def syzygies(ring: RingSpec, vectors):
    """Generators of {c in R^s : sum c_i * vectors_i = 0}, s = len(vectors).

    This is an exact computation over R; quotient relations are NOT folded in,
    so callers wanting syzygies over A include the relation vectors
    explicitly. Every returned syzygy is verified against the inputs.
    """
    vecs = list(vectors)
    if not vecs:
        return []
    rank = vecs[0].rank
    _, syz = _module_buchberger(ring, vecs, rank, track=True)
    out = []
    seen = set()
    for c in syz:
        if c.is_zero() or c in seen:
            continue
        seen.add(c)
        acc = ModuleVector.zero(ring.field, ring.nvars, rank)
        for ci, v in zip(c.components, vecs):
            if not ci.is_zero():
                acc = acc + v.scale(ci)
        assert acc.is_zero(), "syzygy identity failed"
        out.append(c)
    return out


def _apply_columns(columns, vec: ModuleVector, target_rank, field, nvars):
    """Image of vec under the map whose i-th column is columns[i]."""
    if target_rank == 0:
        return ModuleVector(())
    out = ModuleVector.zero(field, nvars, target_rank)
    for ci, col in zip(vec.components, columns):
        if not ci.is_zero():
            out = out + col.scale(ci)
    return out


def preimage_submodule(ring: RingSpec, K, L, phi_columns):
    """Generators of {u in span(K) : phi(u) in span(L)}.

    K lives in R^a, L in R^b, phi_columns are the a columns of phi in R^b.
    Computed as syzygies of the family [phi*K | L] projected to the
    K-coordinates and pushed back through K.
    """
    K = list(K)
    L = list(L)
    if not K:
        return []
    a = K[0].rank
    b = L[0].rank if L else (phi_columns[0].rank if phi_columns else 0)
    if b == 0:
        return [k for k in K if not k.is_zero()]
    phiK = [_apply_columns(phi_columns, k, b, ring.field, ring.nvars) for k in K]
    family = phiK + L
    out = []
    seen = set()
    for c in syzygies(ring, family):
        u = ModuleVector.zero(ring.field, ring.nvars, a)
        for ci, k in zip(c.components[:len(K)], K):
            if not ci.is_zero():
                u = u + k.scale(ci)
        if not u.is_zero() and u not in seen:
            seen.add(u)
            out.append(u)
    return out


class FPModule:
    """R^rank modulo a relation submodule, held as its reduced module GB."""

    __slots__ = ("ring", "rank", "_gb")

    def __init__(self, ring: RingSpec, rank: int, relations=()):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        self.ring = ring
        self.rank = rank
        if rank == 0:
            self._gb = ModuleGB(ring, 0, ())
        else:
            self._gb = module_gb(ring, list(relations), rank)

    @classmethod
    def free(cls, ring: RingSpec, rank: int) -> "FPModule":
        return cls(ring, rank)

    @classmethod
    def cyclic(cls, ring: RingSpec, ideal_gens=()) -> "FPModule":
        rels = [ModuleVector((ring.check_member(f),)) for f in ideal_gens]
        return cls(ring, 1, rels)

    @classmethod
    def zero_module(cls, ring: RingSpec) -> "FPModule":
        return cls(ring, 0)

    @property
    def relations(self):
        return self._gb.generators

    @property
    def gb(self) -> ModuleGB:
        return self._gb

    def quotient_by_polys(self, polys) -> "FPModule":
        """M / (f_1, .., f_k)M."""
        rels = list(self.relations)
        for f in polys:
            self.ring.check_member(f)
            for i in range(self.rank):
                rels.append(ModuleVector.unit(self.ring.field, self.ring.nvars,
                                              self.rank, i, f))
        return FPModule(self.ring, self.rank, rels)

    def standard_pairs(self):
        """(position, monomial) pairs spanning the quotient over k, or INFINITE."""
        if self.rank == 0:
            return []
        n = self.ring.nvars
        order = self.ring.order
        leads = [g.lead(order)[:2] for g in self.relations]
        out = []
        for p in range(self.rank):
            lms = [m for q, m in leads if q == p]
            if any(m.is_one() for m in lms):
                continue
            bounds = [None] * n
            for lm in lms:
                sup = lm.support()
                if len(sup) == 1:
                    i = sup[0]
                    if bounds[i] is None or lm.exps[i] < bounds[i]:
                        bounds[i] = lm.exps[i]
            if any(b is None for b in bounds):
                return INFINITE
            for exps in itertools.product(*(range(b) for b in bounds)):
                m = Monomial(exps)
                if not any(lm.divides(m) for lm in lms):
                    out.append((p, m))
        out.sort(key=lambda pm: _pot_key(order, pm[0], pm[1]))
        return out

    def length(self):
        sp = self.standard_pairs()
        if sp is INFINITE:
            return INFINITE
        return len(sp)

    def is_zero(self) -> bool:
        if self.rank == 0:
            return True
        return all(self._gb.contains(u) for u in unit_vectors(self.ring, self.rank))

    def annihilator_of_generator(self, i: int):
        """Generators of the ideal {f in R : f*e_i lies in the relations}."""
        one_vec = ModuleVector((self.ring.one(),))
        col = ModuleVector.unit(self.ring.field, self.ring.nvars, self.rank, i)
        gens = preimage_submodule(self.ring, [one_vec], list(self.relations), [col])
        return [v.components[0] for v in gens]

    def support_dimension(self) -> int:
        """Dimension of Supp M; -1 for the zero module (empty support).

        Supp M is the union over generators of V(relations : e_i), so the
        dimension is the max of the generator-wise quotient ideal dimensions.
        """
        best = -1
        for i in range(self.rank):
            gens = self.annihilator_of_generator(i)
            gb = buchberger(self.ring, gens)
            if gb.is_unit_ideal():
                continue
            best = max(best, krull_dimension(gb))
        return best

    def __eq__(self, other):
        return (isinstance(other, FPModule) and self.ring == other.ring
                and self.rank == other.rank and self.relations == other.relations)

    def __hash__(self):
        return hash((self.ring, self.rank, self.relations))

    def describe(self) -> dict:
        return {
            "rank": self.rank,
            "relations": [v.to_str(self.ring) for v in self.relations],
        }

    def __repr__(self):
        return f"FPModule(rank {self.rank}, {len(self.relations)} relations)"


class ModuleMap:
    """A-linear map between presented modules, given on free generators."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FPModule, target: FPModule, matrix):
        if source.ring != target.ring:
            raise RingMismatch("map between modules over different rings")
        matrix = tuple(matrix)
        if len(matrix) != source.rank:
            raise MapNotWellDefined("need one column per source generator")
        for col in matrix:
            if col.rank != target.rank:
                raise MapNotWellDefined("column rank does not match the target")
        self.source = source
        self.target = target
        self.matrix = matrix
        for rel in source.relations:
            if not target.gb.contains(self.apply_vec(rel)):
                raise MapNotWellDefined("source relation does not map into target relations")

    @classmethod
    def multiplication(cls, M: FPModule, f: Polynomial) -> "ModuleMap":
        cols = [ModuleVector.unit(M.ring.field, M.ring.nvars, M.rank, i, f)
                for i in range(M.rank)]
        return cls(M, M, cols)

    @classmethod
    def zero_map(cls, source: FPModule, target: FPModule) -> "ModuleMap":
        cols = [ModuleVector.zero(source.ring.field, source.ring.nvars, target.rank)
                if target.rank else ModuleVector(())
                for _ in range(source.rank)]
        return cls(source, target, cols)

    def apply_vec(self, v: ModuleVector) -> ModuleVector:
        return _apply_columns(self.matrix, v, self.target.rank,
                              self.source.ring.field, self.source.ring.nvars)


def subquotient(ker_gens, img_gens, ambient: FPModule) -> FPModule:
    """span(ker_gens)/(span(img_gens) + relations), presented on ker_gens."""
    ring = ambient.ring
    ker_gens = list(ker_gens)
    img_gens = list(img_gens)
    check = module_gb(ring, ker_gens + list(ambient.relations), ambient.rank)
    for v in img_gens:
        if not check.contains(v):
            raise ImageNotInKernel("image generator outside the kernel span")
    r = len(ker_gens)
    if r == 0:
        return FPModule.zero_module(ring)
    units = unit_vectors(ring, r)
    rels = preimage_submodule(ring, units, img_gens + list(ambient.relations), ker_gens)
    return FPModule(ring, r, rels)


def kernel_of_map(phi: ModuleMap):
    """Kernel of a presented-module map, with its embedding into the source.

    Returns (K, embedding) where embedding[i] is the image in R^source_rank of
    the i-th kernel generator.
    """
    src = phi.source
    ring = src.ring
    if src.rank == 0:
        return FPModule.zero_module(ring), []
    units = unit_vectors(ring, src.rank)
    K = preimage_submodule(ring, units, list(phi.target.relations), list(phi.matrix))
    for v in K:
        assert phi.target.gb.contains(phi.apply_vec(v)), "kernel generator misses target relations"
    kernel = subquotient(K, [], src)
    return kernel, K


def module_origin_support(M: FPModule) -> bool:
    """True when Supp M is at most the origin; requires finite length.

    Each variable acts nilpotently iff its D-th power kills every generator,
    where D = length(M) bounds the nilpotency index.
    """
    d = M.length()
    if d is INFINITE:
        raise NotZeroDimensional("module_origin_support needs finite length")
    if d == 0:
        return True
    n = M.ring.nvars
    for i in range(n):
        p = Polynomial.term(M.ring.field, n, Monomial.variable(i, n, d), M.ring.field.one)
        for a in range(M.rank):
            v = ModuleVector.unit(M.ring.field, n, M.rank, a, p)
            if not M.gb.contains(v):
                return False
    return True


def gamma_saturation(M: FPModule, f: Polynomial):
    """Gamma = (0 :_M f^infinity) and the quotient M/Gamma.

    Iterates (0 : f^k) until the submodule stabilizes (compared by reduced
    module GB), with a hard cap. The returned quotient is checked to have no
    f-torsion.
    """
    ring = M.ring
    ring.check_member(f)
    if M.rank == 0:
        return M, M
    units = unit_vectors(ring, M.rank)
    rel = list(M.relations)
    prev_gb = None
    prev_gens = None
    gamma_gens = None
    fk = ring.one()
    for _ in range(SATURATION_CAP):
        fk = fk * f
        cols = [ModuleVector.unit(ring.field, ring.nvars, M.rank, i, fk)
                for i in range(M.rank)]
        gens = preimage_submodule(ring, units, rel, cols)
        gb = module_gb(ring, gens + rel, M.rank)
        if prev_gb is not None and gb.generators == prev_gb.generators:
            gamma_gens = prev_gens
            break
        prev_gb, prev_gens = gb, gens
    if gamma_gens is None:
        raise SaturationCapExceeded(f"(0 : f^k) did not stabilize within {SATURATION_CAP} steps")
    gamma = subquotient(gamma_gens, [], M)
    quotient = FPModule(ring, M.rank, rel + gamma_gens)
    # contract: f is a nonzerodivisor on the quotient
    fcols = [ModuleVector.unit(ring.field, ring.nvars, M.rank, i, f)
             for i in range(M.rank)]
    residual = preimage_submodule(ring, units, list(quotient.relations), fcols)
    for v in residual:
        assert quotient.gb.contains(v), "saturation left f-torsion behind"
    return gamma, quotient
