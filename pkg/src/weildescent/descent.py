"""The constructive descent pipeline.

Given a variety X over L and a descent datum {f_sigma}, produce a birational
map R onto a model Y whose ideal is generated over the fixed field, together
with verification certificates.  Includes the morphism and automorphism
variants and the uniqueness comparator.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import (
    CocycleViolation,
    InputError,
    MissingInverse,
    MorphismIncompatible,
    ConjugationNotClosed,
    NotIntoConjugate,
    NotKRational,
    VerificationError,
    ZeroDenominator,
)
from .groebner import Ideal, MonomialOrder, eliminate, ideals_equal, image_ideal, normal_form, saturate
from .invariants import BlockPermutationAction, generate_invariants
from .multipoly import (
    MultiPoly,
    PolyRing,
    RationalMap,
    compose_map,
    identity_map,
    poly_trace,
    _substitute_fraction,
)
from .numberfield import GaloisGroup, power_basis

__all__ = [
    "AffineVariety",
    "DescentDatum",
    "DescentResult",
    "DatumReport",
    "verify_datum",
    "disjointify",
    "build_phi",
    "descend",
    "recover_inverse",
    "descend_morphism",
    "transport_automorphisms",
    "compare_models",
    "maps_equal_mod_ideal",
]


class AffineVariety:
    """V(generators) in affine space over L; inconsistent systems are rejected."""

    __slots__ = ("ring", "generators", "_ideal")

    def __init__(self, ring: PolyRing, generators, budget=None):
        gens = [g for g in generators if not g.is_zero()]
        for g in gens:
            if g.ring != ring:
                raise InputError("variety generators must live in one ring")
        self.ring = ring
        self.generators = tuple(gens)
        self._ideal = Ideal(ring, gens)
        if self._ideal.is_unit(budget=budget):
            raise InputError("the given equations have no common zero (unit ideal)")

    @property
    def ideal(self) -> Ideal:
        return self._ideal

    def conjugate_ideal(self, group, sigma) -> Ideal:
        return self._ideal.sigma(group, sigma)

    def __repr__(self):
        return f"AffineVariety<{', '.join(str(g) for g in self.generators)}>"


class DescentDatum:
    """A family of maps f_sigma: X -> X^sigma indexed by the Galois group."""

    __slots__ = ("variety", "group", "maps")

    def __init__(self, variety: AffineVariety, group: GaloisGroup, maps):
        if isinstance(maps, dict):
            lst = [maps.get(i) for i in range(group.order)]
        else:
            lst = list(maps)
            if len(lst) != group.order:
                raise InputError("need one map per group element")
        if lst[group.identity_index] is None:
            lst[group.identity_index] = identity_map(variety.ring)
        if any(f is None for f in lst):
            raise InputError("descent datum misses a group element")
        for f in lst:
            if f.ring != variety.ring:
                raise InputError("datum maps must be defined on the variety's ring")
            if f.target_arity != variety.ring.nvars:
                raise InputError("datum maps must land in the same affine space")
        self.variety = variety
        self.group = group
        self.maps = tuple(lst)


@dataclass
class DatumReport:
    checks: list = dc_field(default_factory=list)  # (label, ok, witness string)

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def add(self, label, ok, witness=None):
        self.checks.append((label, ok, witness))


@dataclass
class DescentResult:
    group: GaloisGroup
    datum: DescentDatum
    y_ring: PolyRing
    y_generators: tuple
    y_ideal: Ideal
    map: RationalMap
    inverse: Optional[RationalMap]
    certificates: dict
    invariant_count: int
    pruned: tuple = ()


# -- map equality on a variety ---------------------------------------------------


def _equality_basis(ideal: Ideal, maps, budget=None):
    """Groebner basis of the ideal saturated by the maps' denominators."""
    dens = []
    for f in maps:
        for _, den in f.components:
            if not den.is_constant():
                dens.append(den)
    if not dens:
        return ideal.groebner_basis(budget=budget)
    prod = ideal.ring.one
    for den in dens:
        prod = prod * den
    return saturate(ideal, prod, budget=budget).groebner_basis(budget=budget)


def maps_equal_mod_ideal(f: RationalMap, g: RationalMap, ideal: Ideal, budget=None):
    """Equality as maps on V(ideal): cross-multiplied differences reduce to 0.

    Returns (equal, witness) where the witness is the first nonzero normal
    form.  Denominators lying in the ideal raise ZeroDenominator.
    """
    if f.target_arity != g.target_arity:
        return False, None
    gb = _equality_basis(ideal, [f, g], budget)
    for (nf_, df_), (ng_, dg_) in zip(f.components, g.components):
        for den in (df_, dg_):
            if not den.is_constant() and normal_form(den, gb, budget).is_zero():
                raise ZeroDenominator("map denominator vanishes on the variety")
        diff = nf_ * dg_ - ng_ * df_
        rem = normal_form(diff, gb, budget)
        if not rem.is_zero():
            return False, rem
    return True, None


def _reduce_map(F: RationalMap, gb, budget=None) -> RationalMap:
    """Normal-form every component; equal to F as a map on the variety."""
    comps = []
    for num, den in F.components:
        rn = normal_form(num, gb, budget)
        if den.is_constant():
            comps.append((rn, den))
        else:
            rd = normal_form(den, gb, budget)
            if rd.is_zero():
                raise ZeroDenominator("map denominator vanishes on the variety")
            comps.append((rn, rd))
    return RationalMap(F.ring, comps)


# -- datum verification ------------------------------------------------------------


def verify_datum(d: DescentDatum, budget=None, strict=True) -> DatumReport:
    """Check f_sigma maps X into X^sigma and the cocycle identity for all pairs."""
    report = DatumReport()
    group = d.group
    X = d.variety
    gb = _equality_basis(X.ideal, d.maps, budget)

    for s in group:
        f = d.maps[s]
        nums = f.numerators()
        dens = f.denominators()
        for den in dens:
            if not den.is_constant() and normal_form(den, gb, budget).is_zero():
                raise ZeroDenominator(
                    f"denominator of the map for sigma_{s} vanishes on X"
                )
        for gi, P in enumerate(X.generators):
            Ps = P.sigma(group, s)
            num, _ = _substitute_fraction(Ps, nums, dens, X.ring)
            rem = normal_form(num, gb, budget)
            ok = rem.is_zero()
            report.add(f"into-conjugate sigma_{s} generator_{gi}", ok,
                       None if ok else str(rem))
            if not ok and strict:
                raise NotIntoConjugate(s, gi, rem)

    for s1 in group:
        for s2 in group:
            lhs = d.maps[group.compose(s1, s2)]
            rhs = compose_map(d.maps[s2].sigma(group, s1), d.maps[s1])
            equal, witness = maps_equal_mod_ideal(lhs, rhs, X.ideal, budget)
            report.add(f"cocycle ({s1}, {s2})", equal,
                       None if equal else str(witness))
            if not equal and strict:
                comp = _first_unequal_component(lhs, rhs, gb, budget)
                raise CocycleViolation(s1, s2, comp, witness)
    return report


def _first_unequal_component(lhs, rhs, gb, budget):
    for k, ((n1, d1), (n2, d2)) in enumerate(zip(lhs.components, rhs.components)):
        if not normal_form(n1 * d2 - n2 * d1, gb, budget).is_zero():
            return k
    return -1


# -- disjointification ---------------------------------------------------------------


def disjointify(d: DescentDatum, budget=None) -> DescentDatum:
    """Augment the model so conjugate varieties are pairwise disjoint.

    Adds one coordinate per non-identity group element, pinned to alpha
    (every non-identity automorphism moves alpha), exactly when some pair of
    conjugates already meets.  Returns the input unchanged otherwise.
    """
    group = d.group
    m = group.order
    if m == 1:
        return d
    X = d.variety
    conj = [X.conjugate_ideal(group, s) for s in group]
    meets = False
    for i in range(m):
        for j in range(i + 1, m):
            joint = Ideal(X.ring, list(conj[i].generators) + list(conj[j].generators))
            if not joint.is_unit(budget=budget):
                meets = True
                break
        if meets:
            break
    if not meets:
        return d

    ring = X.ring
    extra = []
    taken = set(ring.variables)
    non_identity = [s for s in group if s != group.identity_index]
    for k in range(len(non_identity)):
        name = f"x{ring.nvars + k + 1}"
        while name in taken:
            name = "_" + name
        taken.add(name)
        extra.append(name)
    big = PolyRing(ring.field, ring.variables + tuple(extra), ring.order)
    alpha = ring.field.gen
    gens = [g.transplant(big) for g in X.generators]
    for name in extra:
        gens.append(big.var(name) - big.constant(alpha))
    Xhat = AffineVariety(big, gens, budget=budget)

    new_maps = []
    for s in group:
        f = d.maps[s]
        comps = [(num.transplant(big), den.transplant(big)) for num, den in f.components]
        for _ in extra:
            comps.append((big.constant(group.apply(s, alpha)), big.one))
        new_maps.append(RationalMap(big, comps, normalize=False))
    return DescentDatum(Xhat, group, new_maps)


# -- the first isomorphism ------------------------------------------------------------


def _phi_action(d: DescentDatum) -> BlockPermutationAction:
    ring = d.variety.ring
    return BlockPermutationAction(
        d.group, ring.nvars, var_names=ring.variables, field=ring.field
    )


def build_phi(d: DescentDatum, budget=None, action=None):
    """Phi: x -> (f_sigma(x))_sigma, and the ideal of Phi(X) in the block ring."""
    group = d.group
    X = d.variety
    action = action or _phi_action(d)
    big = action.ring
    n = X.ring.nvars

    comps = []
    for s in group:
        comps.extend(d.maps[s].components)
    phi = RationalMap(X.ring, comps, normalize=False)

    # Identity block variables carry the X names, so transplanting by name
    # lands polynomials on the e-block.
    gens = []
    e = group.identity_index
    for s in group:
        var_map = {i: action.variable_index(s, i) for i in range(n)}
        for P in X.generators:
            gens.append(P.sigma(group, s).transplant(big, var_map))
    for s in group:
        if s == e:
            continue
        f = d.maps[s]
        for j, (num, den) in enumerate(f.components):
            y = big.var(action.variable_index(s, j))
            gens.append(y * den.transplant(big) - num.transplant(big))
    ideal = Ideal(big, gens)
    if not phi.is_polynomial():
        prod = big.one
        for _, den in phi.components:
            if not den.is_constant():
                prod = prod * den.transplant(big)
        ideal = saturate(ideal, prod, budget=budget)
    return phi, ideal


# -- the pipeline -----------------------------------------------------------------------


def _target_names(count, taken):
    names = []
    for k in range(1, count + 1):
        name = f"t{k}"
        while name in taken:
            name = "_" + name
        names.append(name)
    return tuple(names)


def _trace_descend_generators(ideal: Ideal, group, budget=None):
    """Replace non-rational generators by their trace family; verify equality."""
    basis = power_basis(ideal.ring.field)
    out = []
    changed = False
    for F in ideal.generators:
        if F.has_rational_coefficients():
            out.append(F)
            continue
        changed = True
        for e in basis:
            T = poly_trace(F.scale(e), group)
            if not T.is_zero():
                out.append(T)
    descended = Ideal(ideal.ring, out)
    if changed and not ideals_equal(descended, ideal, budget=budget):
        raise VerificationError("trace descent changed the ideal")
    return descended


def _x_stable_and_trivial(d: DescentDatum, budget=None):
    group = d.group
    X = d.variety
    ident = identity_map(X.ring)
    for s in group:
        if not ideals_equal(X.ideal, X.conjugate_ideal(group, s), budget=budget):
            return False
        equal, _ = maps_equal_mod_ideal(d.maps[s], ident, X.ideal, budget)
        if not equal:
            return False
    return True


def descend(
    d: DescentDatum,
    budget=None,
    prune=False,
    want_inverse=True,
) -> DescentResult:
    """Run the full pipeline; every certificate is verified, never assumed."""
    group = d.group
    report = verify_datum(d, budget=budget, strict=True)
    certificates = {
        "datum_cocycle": True,
        "datum_into_conjugate": True,
    }

    if _x_stable_and_trivial(d, budget):
        # X is fixed by every sigma and the datum is trivial: X is already a
        # model over the fixed field after trace-descending its generators.
        y_ideal = _trace_descend_generators(d.variety.ideal, group, budget)
        R = identity_map(d.variety.ring)
        certificates.update(
            disjoint_conjugates=True,
            y_sigma_stable=True,
            y_rational_generators=all(
                g.has_rational_coefficients() for g in y_ideal.generators
            ),
            descent_relation=True,
            inverse_recovered=True,
        )
        return DescentResult(
            group=group,
            datum=d,
            y_ring=d.variety.ring,
            y_generators=y_ideal.generators,
            y_ideal=y_ideal,
            map=R,
            inverse=R,
            certificates=certificates,
            invariant_count=d.variety.ring.nvars,
        )

    dd = disjointify(d, budget=budget)
    Xw = dd.variety

    # Certify disjointness of the working model's conjugates.
    disjoint = True
    conj = [Xw.conjugate_ideal(group, s) for s in group]
    for i in range(group.order):
        for j in range(i + 1, group.order):
            joint = Ideal(Xw.ring, list(conj[i].generators) + list(conj[j].generators))
            if not joint.is_unit(budget=budget):
                disjoint = False
    certificates["disjoint_conjugates"] = disjoint
    if not disjoint and group.order > 1:
        raise VerificationError("conjugate models are not pairwise disjoint")

    action = _phi_action(dd)
    phi, phi_ideal = build_phi(dd, budget=budget, action=action)
    invars = generate_invariants(action, budget=budget)

    # Certify the invariance and rationality of the generators (exact).
    certificates["psi_theta_invariant"] = all(
        action.is_invariant(E) for E in invars
    )
    certificates["psi_rational"] = all(
        E.has_rational_coefficients() for E in invars
    )
    if not (certificates["psi_theta_invariant"] and certificates["psi_rational"]):
        raise VerificationError("invariant generators failed their certificates")

    tnames = _target_names(len(invars), set(Xw.ring.variables))
    psi = RationalMap(action.ring, [(E, action.ring.one) for E in invars],
                      normalize=False)
    R = compose_map(psi, phi)
    x_gb = Xw.ideal.groebner_basis(budget=budget)
    R = _reduce_map(R, x_gb, budget)

    y_ideal = image_ideal(R, Xw.ideal, tnames, budget=budget)
    y_ring = y_ideal.ring

    certificates["y_sigma_stable"] = all(
        ideals_equal(y_ideal, y_ideal.sigma(group, s), budget=budget) for s in group
    )
    if not certificates["y_sigma_stable"]:
        raise VerificationError("Y is not stable under the group action")

    y_ideal = _trace_descend_generators(y_ideal, group, budget)
    certificates["y_rational_generators"] = all(
        g.has_rational_coefficients() for g in y_ideal.generators
    )
    if not certificates["y_rational_generators"]:
        raise VerificationError("trace descent left non-rational generators")

    inverse = None
    pruned = ()
    if prune:
        y_ideal, R, pruned = _prune_coordinates(y_ideal, R, budget)
        y_ring = y_ideal.ring
        certificates["y_sigma_stable"] = all(
            ideals_equal(y_ideal, y_ideal.sigma(group, s), budget=budget)
            for s in group
        )
        y_ideal = _trace_descend_generators(y_ideal, group, budget)
        certificates["y_rational_generators"] = all(
            g.has_rational_coefficients() for g in y_ideal.generators
        )
        if not (certificates["y_sigma_stable"]
                and certificates["y_rational_generators"]):
            raise VerificationError("pruning broke a certificate")

    # Relation R = R^sigma o f_sigma on the working model.
    relation = True
    for s in group:
        rhs = compose_map(R.sigma(group, s), dd.maps[s])
        equal, witness = maps_equal_mod_ideal(R, rhs, Xw.ideal, budget)
        if not equal:
            relation = False
            break
    certificates["descent_relation"] = relation
    if not relation:
        raise VerificationError("R != R^sigma o f_sigma on X", witness)

    if want_inverse:
        inverse = recover_inverse(R, Xw.ideal, y_ideal, budget=budget)
    certificates["inverse_recovered"] = inverse is not None

    # Fold the disjointification back onto the original model: substitute the
    # pinned coordinates and keep the original components of the inverse.
    if dd is not d:
        R, inverse = _restrict_to_original(d, dd, R, inverse)
        certificates["descent_relation"] = all(
            maps_equal_mod_ideal(
                R, compose_map(R.sigma(group, s), d.maps[s]), d.variety.ideal, budget
            )[0]
            for s in group
        )
        if not certificates["descent_relation"]:
            raise VerificationError("R != R^sigma o f_sigma after restriction")

    if inverse is not None:
        sample = d.variety
        ok = _verify_inverse(R, inverse, sample.ideal, y_ideal, budget)
        if not ok:
            inverse = None
            certificates["inverse_recovered"] = False

    return DescentResult(
        group=group,
        datum=d,
        y_ring=y_ring,
        y_generators=y_ideal.generators,
        y_ideal=y_ideal,
        map=R,
        inverse=inverse,
        certificates=certificates,
        invariant_count=len(invars),
        pruned=pruned,
    )


def _restrict_to_original(d, dd, R, inverse):
    ring = d.variety.ring
    n = ring.nvars
    values = [ring.var(i) for i in range(n)]
    alpha = ring.constant(ring.field.gen)
    for _ in range(dd.variety.ring.nvars - n):
        values.append(alpha)
    comps = []
    for num, den in R.components:
        comps.append((num.substitute(values), den.substitute(values)))
    R0 = RationalMap(ring, comps)
    inv0 = None
    if inverse is not None:
        inv0 = RationalMap(inverse.ring, list(inverse.components)[:n],
                           normalize=False)
    return R0, inv0


def _verify_inverse(R, Rinv, x_ideal, y_ideal, budget):
    ident_x = identity_map(x_ideal.ring)
    ident_y = identity_map(y_ideal.ring)
    try:
        back = compose_map(Rinv, R)
        ok1, _ = maps_equal_mod_ideal(back, ident_x, x_ideal, budget)
        forth = compose_map(R, Rinv)
        ok2, _ = maps_equal_mod_ideal(forth, ident_y, y_ideal, budget)
    except ZeroDenominator:
        return False
    return ok1 and ok2


def recover_inverse(R: RationalMap, I_X: Ideal, I_Y: Ideal, budget=None):
    """Search the graph ideal for coordinate functions linear in each source variable.

    Soft outcome: returns None when no usable elements appear.
    """
    ring = I_X.ring
    n = ring.nvars
    tnames = I_Y.ring.variables
    split = n + (0 if R.is_polynomial() else 1)
    names = list(ring.variables)
    aux = None
    if not R.is_polynomial():
        aux = "_sat"
        while aux in set(names) | set(tnames):
            aux = "_" + aux
        names.append(aux)
    big = PolyRing(ring.field, tuple(names) + tnames, MonomialOrder("block", split=split))
    gens = [g.transplant(big) for g in I_X.generators]
    for tname, (num, den) in zip(tnames, R.components):
        gens.append(big.var(tname) * den.transplant(big) - num.transplant(big))
    if aux is not None:
        prod = big.one
        for _, den in R.components:
            if not den.is_constant():
                prod = prod * den.transplant(big)
        gens.append(big.one - big.var(aux) * prod)
    gb = Ideal(big, gens).groebner_basis(order=big.order, budget=budget)

    y_gb = I_Y.groebner_basis(budget=budget)
    target = I_Y.ring
    found = {}
    for g in gb.elements:
        use = [i for i in range(split) if g.uses_variable(i)]
        if len(use) != 1 or use[0] >= n:
            continue
        i = use[0]
        if i in found or g.degree_in(i) != 1:
            continue
        # g = c(t) * x_i + b(t)
        c_terms, b_terms = {}, {}
        for m, coeff in g.terms.items():
            mm = list(m[split:])
            if m[i] == 1:
                c_terms[tuple(mm)] = coeff
            else:
                b_terms[tuple(mm)] = coeff
        c = MultiPoly(target, {m: c for m, c in c_terms.items()})
        b = MultiPoly(target, {m: c for m, c in b_terms.items()})
        if normal_form(c, y_gb, budget).is_zero():
            continue
        found[i] = (-b, c)
    if len(found) < n:
        return None
    return RationalMap(target, [found[i] for i in range(n)])


# -- optional coordinate pruning --------------------------------------------------------


def _prune_coordinates(y_ideal: Ideal, R: RationalMap, budget=None):
    """Drop target coordinates expressible in the remaining ones.

    Highest-index coordinates are tried first; a coordinate t_j is dropped
    only when the ideal contains t_j - p(remaining kept coordinates).
    """
    ring = y_ideal.ring
    names = list(ring.variables)
    current = y_ideal
    kept = list(names)
    dropped = []
    for name in reversed(names):
        if len(kept) == 1:
            break
        idx = kept.index(name)
        reordered = PolyRing(
            current.ring.field,
            (name,) + tuple(v for v in kept if v != name),
            MonomialOrder("block", split=1),
        )
        moved = Ideal(reordered, [g.transplant(reordered) for g in current.generators])
        gb = moved.groebner_basis(order=reordered.order, budget=budget)
        expressible = any(
            g.degree_in(0) == 1
            and g.terms.get(
                (1,) + (0,) * (reordered.nvars - 1)
            ) is not None
            and all(m[0] == 0 for m in g.terms if m != (1,) + (0,) * (reordered.nvars - 1))
            for g in gb.elements
        )
        if expressible:
            dropped.append(name)
            kept.pop(idx)
            current = eliminate(current, [name], budget=budget)
    kept_idx = [i for i, v in enumerate(names) if v in set(kept)]
    comps = [R.components[i] for i in kept_idx]
    R2 = RationalMap(R.ring, comps, normalize=False)
    return current, R2, tuple(dropped)


# -- other versions of the theorem -------------------------------------------------------


def descend_morphism(
    d: DescentDatum, phi: RationalMap, Z: AffineVariety, budget=None
):
    """Descent compatible with a morphism phi: X -> Z over the fixed field.

    Returns (DescentResult, L) with L o R = phi modulo I(X) and L defined
    over the fixed field.
    """
    group = d.group
    X = d.variety
    if any(not g.has_rational_coefficients() for g in Z.generators):
        raise InputError("Z must be given by generators over the fixed field")
    if phi.ring != X.ring:
        raise InputError("phi must be defined on X's ring")
    if phi.target_arity != Z.ring.nvars:
        raise InputError("phi must land in Z's ambient space")

    gb = _equality_basis(X.ideal, [phi], budget)
    for P in Z.generators:
        num, _ = _substitute_fraction(
            P, phi.numerators(), phi.denominators(), X.ring
        )
        if not normal_form(num, gb, budget).is_zero():
            raise InputError("phi does not map X into Z")
    for s in group:
        rhs = compose_map(phi.sigma(group, s), d.maps[s])
        equal, witness = maps_equal_mod_ideal(phi, rhs, X.ideal, budget)
        if not equal:
            raise MorphismIncompatible(s, witness)

    result = descend(d, budget=budget)
    if result.inverse is None:
        raise MissingInverse(
            "morphism transport needs an explicit inverse of R"
        )
    y_gb = result.y_ideal.groebner_basis(budget=budget)
    L = compose_map(phi, result.inverse)
    L = _reduce_map(L, y_gb, budget)

    for s in group:
        equal, witness = maps_equal_mod_ideal(
            L.sigma(group, s), L, result.y_ideal, budget
        )
        if not equal:
            raise NotKRational("transported morphism is not fixed-field rational",
                               witness)
    back = compose_map(L, result.map)
    equal, witness = maps_equal_mod_ideal(back, phi, X.ideal, budget)
    if not equal:
        raise VerificationError("L o R != phi on X", witness)
    return result, L


def transport_automorphisms(result: DescentResult, G, budget=None):
    """H = R G R^{-1} on Y, verified closed under the group action."""
    if result.inverse is None:
        raise MissingInverse("automorphism transport needs an inverse of R")
    d = result.datum
    group = result.group
    X = d.variety
    x_gb = _equality_basis(X.ideal, list(G) + list(d.maps), budget)

    for g in G:
        for gi, P in enumerate(X.generators):
            num, _ = _substitute_fraction(P, g.numerators(), g.denominators(), X.ring)
            if not normal_form(num, x_gb, budget).is_zero():
                raise InputError(
                    f"input map {G.index(g)} is not an automorphism of X "
                    f"(generator {gi} not preserved)"
                )

    def setwise_member(cand, pool, ideal):
        for member in pool:
            equal, _ = maps_equal_mod_ideal(cand, member, ideal, budget)
            if equal:
                return True
        return False

    for s in group:
        for g in G:
            lhs = compose_map(g.sigma(group, s), d.maps[s])
            candidates = [compose_map(d.maps[s], gp) for gp in G]
            if not setwise_member(lhs, candidates, X.ideal):
                raise ConjugationNotClosed(s)

    y_gb = result.y_ideal.groebner_basis(budget=budget)
    H = []
    for g in G:
        h = compose_map(result.map, compose_map(g, result.inverse))
        h = _reduce_map(h, y_gb, budget)
        if not setwise_member(h, H, result.y_ideal):
            H.append(h)

    for s in group:
        for h in H:
            if not setwise_member(h.sigma(group, s), H, result.y_ideal):
                raise ConjugationNotClosed(s)
    return H


def compare_models(model1, model2, d: DescentDatum, budget=None) -> RationalMap:
    """J = R2 o R1^{-1}: Y1 -> Y2, certified defined over the fixed field.

    Each model is (map, ideal, inverse-or-None) or a DescentResult.
    """
    def unpack(model):
        if isinstance(model, DescentResult):
            return model.map, model.y_ideal, model.inverse
        return model

    R1, Y1, R1_inv = unpack(model1)
    R2, Y2, _ = unpack(model2)
    if R1_inv is None:
        raise MissingInverse("compare_models needs an inverse for the first model")

    group = d.group
    X = d.variety
    for label, R in (("first", R1), ("second", R2)):
        for s in group:
            rhs = compose_map(R.sigma(group, s), d.maps[s])
            equal, witness = maps_equal_mod_ideal(R, rhs, X.ideal, budget)
            if not equal:
                raise VerificationError(
                    f"{label} model does not satisfy R = R^sigma o f_sigma",
                    witness,
                )

    y1_gb = Y1.groebner_basis(budget=budget)
    J = compose_map(R2, R1_inv)
    J = _reduce_map(J, y1_gb, budget)
    for s in group:
        equal, witness = maps_equal_mod_ideal(J.sigma(group, s), J, Y1, budget)
        if not equal:
            raise NotKRational("comparison map is not fixed-field rational", witness)
    return J
