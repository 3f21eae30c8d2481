"""Maurer-Cartan algebra, twisting cochains, bar and cobar constructions.

Sign regime.  The global identifications are s = u*, s⁻¹ = u (so s⊗s⁻¹ = 1
and s⁻¹⊗s = -1); the default convention is the minus-sign bar differential
d^int - d^ext together with the plus-sign cobar differential d^int + d^ext,
under which the universal twisting cochains are β(sa) = -a and ω(c) = s⁻¹c.
Both conventions are constructible and conjugate under the automorphism π
multiplying length-n words by (-1)^n; every report names the active
convention.

Bar:   B A  = (T^c(s A₋), d^int ∓ d^ext), coextending
           sa ↦ -s(da)            (internal)
           sa⊗sb ↦ (-1)^{|a|} s(ab)   (external)
Cobar: Ω C = (T(s⁻¹ C₋), d^int ± d^ext), extending
           s⁻¹c ↦ -s⁻¹(dc)           (internal)
           s⁻¹c ↦ -(-1)^{|c¹|} s⁻¹c¹ ⊗ s⁻¹c²   (external, reduced coproduct)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .scalars import Field
from .graded import (GradedSpace, GradedMap, Truncation, tensor_label,
                     susp_label, label_str)
from .complexes import DgSpace
from .algebras import (DgAlgebra, tensor_algebra, extend_derivation,
                       word_label, word_syms, UNIT_WORD, AlgebraError)
from .coalgebras import (DgCoalgebra, tensor_coalgebra, coshuffle_comult,
                         coextend_coderivation, ReducedCoalgebra, red_label)
from .linalg import vaddmul, vscale


class ConventionMismatch(Exception):
    pass


class EnumerationTooLarge(Exception):
    pass


class NotCocommutative(Exception):
    pass


class NotCommutative(Exception):
    pass


MINUS, PLUS = "minus", "plus"


# -- the Maurer-Cartan algebra -------------------------------------------------------


@dataclass
class MaurerCartanAlgebra:
    algebra: DgAlgebra
    comult: GradedMap
    counit: dict
    antipode: GradedMap

    @property
    def space(self):
        return self.algebra.space


def mc_algebra(field: Field, trunc: Truncation) -> MaurerCartanAlgebra:
    """mc = (T(u), du = -u²), |u| = -1, with its Hopf structure.

    Construction verifies du + u² = 0, the parity formula for d(uⁿ), the
    dg-coalgebra axioms of the coshuffle coproduct, and the antipode
    convolution identity S⋆id = id⋆S = eε on the window.
    """
    if trunc.weight_cap < 2:
        raise AlgebraError("mc needs weight_cap ≥ 2")
    u = "u"
    d_gen = {u: {word_label((u, u)): field.of(-1)}}
    alg = tensor_algebra(field, [(u, -1)], trunc, d_gen=d_gen,
                         augmented=True, name="mc")
    space = alg.space
    comult = coshuffle_comult(space, {u: -1})
    counit = {UNIT_WORD: field.one()}
    S = GradedMap(space, space, 0)
    for lab in space.labels():
        n = len(word_syms(lab))
        exp = (n * (n - 1)) // 2 + n
        S.set(lab, {lab: field.sign(exp)})
    mc = MaurerCartanAlgebra(alg, comult, counit, S)
    issues = verify_mc(mc)
    if issues:
        raise AlgebraError(f"mc construction failed: {issues[0]}")
    return mc


def verify_mc(mc: MaurerCartanAlgebra) -> list[str]:
    alg, field = mc.algebra, mc.algebra.field
    space = alg.space
    issues = []
    u = word_label(("u",))
    du = alg.d.apply_label(u)
    uu = alg.product({u: field.one()}, {u: field.one()})
    if vaddmul(field, du, field.one(), uu):
        issues.append("du + u² ≠ 0")
    for lab in space.labels():
        n = len(word_syms(lab))
        d = alg.d.apply_label(lab)
        if n % 2 == 0:
            if d:
                issues.append(f"d(u^{n}) ≠ 0")
        elif n + 1 <= space.window.weight_cap:
            want = {word_label(("u",) * (n + 1)): field.of(-1)}
            if d != space.project(want):
                issues.append(f"d(u^{n}) ≠ -u^{n + 1}")
    co = DgCoalgebra(alg.dg, mc.comult, mc.counit, atom=UNIT_WORD, name="mc")
    issues.extend(co.verify())
    # Δ and ε are algebra maps (bialgebra compatibility)
    issues.extend(bialgebra_compat_issues(alg, mc.comult, mc.counit))
    # antipode convolution identity on words the window can see in full
    cap = space.window.weight_cap
    for lab in space.labels():
        if len(word_syms(lab)) > cap - 1:
            continue
        left: dict = {}
        right: dict = {}
        for t, c in mc.comult.apply_label(lab).items():
            _, a, b = t
            left = vaddmul(field, left, c,
                           alg.product(mc.antipode.apply_label(a),
                                       {b: field.one()}))
            right = vaddmul(field, right, c,
                            alg.product({a: field.one()},
                                        mc.antipode.apply_label(b)))
        want = vscale(field, mc.counit.get(lab, field.zero()), alg.unit)
        if left != want or right != want:
            issues.append(f"antipode identity fails at {label_str(lab)}")
            break
    return issues


def bialgebra_compat_issues(alg: DgAlgebra, comult: GradedMap,
                            counit: dict) -> list[str]:
    """Δ(xy) = Δ(x)Δ(y) with the Koszul middle swap, and ε multiplicative."""
    field = alg.field
    space = alg.space
    TT = comult.target
    cap = space.window.weight_cap
    issues = []
    for x in space.labels():
        for y in space.labels():
            wx, wy = space.weight_of(x), space.weight_of(y)
            if wx is not None and wy is not None and wx + wy > cap:
                continue   # product overflows the cap; nothing to compare
            lhs = comult(alg._pair(x, y))
            dx = comult.apply_label(x)
            dy = comult.apply_label(y)
            rhs: dict = {}
            for t1, c1 in dx.items():
                _, x1, x2 = t1
                for t2, c2 in dy.items():
                    _, y1, y2 = t2
                    sign = field.sign(space.degree_of(x2)
                                      * space.degree_of(y1))
                    for m1, cm1 in alg._pair(x1, y1).items():
                        for m2, cm2 in alg._pair(x2, y2).items():
                            lab = tensor_label(m1, m2)
                            if lab in TT:
                                coeff = field.mul(field.mul(c1, c2),
                                                  field.mul(cm1, cm2))
                                rhs = vaddmul(field, rhs,
                                              field.mul(sign, coeff),
                                              {lab: field.one()})
            # drop components the window cannot represent on the left
            lhs = {k: v for k, v in lhs.items() if k in TT}
            if lhs != rhs:
                issues.append(
                    f"Δ not multiplicative at ({label_str(x)},{label_str(y)})")
                return issues
            el = counit.get(x, field.zero())
            er = counit.get(y, field.zero())
            exy = field.zero()
            for m, cm in alg._pair(x, y).items():
                exy = field.add(exy, field.mul(cm,
                                               counit.get(m, field.zero())))
            if exy != field.mul(el, er):
                issues.append(
                    f"ε not multiplicative at ({label_str(x)},{label_str(y)})")
                return issues
    return issues


# -- Maurer-Cartan elements ------------------------------------------------------------


def mc_verify(A: DgAlgebra, a: dict) -> dict:
    """Residue of the Maurer-Cartan equation da + a·a (zero vector = pass)."""
    return vaddmul(A.field, A.d(a), A.field.one(), A.product(a, a))


def mc_enumerate(A: DgAlgebra, limit: int = 200000) -> list[dict]:
    """All Maurer-Cartan elements over F_p, by exhaustive enumeration."""
    field = A.field
    if field.p is None:
        raise EnumerationTooLarge("enumeration needs a finite field")
    basis = A.space.basis(-1)
    if field.p ** len(basis) > limit:
        raise EnumerationTooLarge(
            f"{field.p}^{len(basis)} candidates exceed the limit")
    out = []
    for coeffs in itertools.product(range(field.p), repeat=len(basis)):
        a = {b: field.of(c) for b, c in zip(basis, coeffs) if c}
        if not mc_verify(A, a):
            out.append(a)
    return out


# -- twisting cochains ------------------------------------------------------------------


@dataclass
class TwistingCochainReport:
    alpha: GradedMap
    pointed: bool
    failures: list = dc_field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


def convolution_square(alpha: GradedMap, C: DgCoalgebra,
                       A: DgAlgebra) -> GradedMap:
    """α⋆α as a graded map C → A (degree -2 for a cochain)."""
    field = alpha.field
    out = GradedMap(C.space, A.space, 2 * alpha.degree)
    for c in C.space.labels():
        val: dict = {}
        for t, coeff in C.comult.apply_label(c).items():
            _, c1, c2 = t
            sign = field.sign(alpha.degree * C.space.degree_of(c1))
            val = vaddmul(field, val, field.mul(coeff, sign),
                          A.product(alpha.apply_label(c1),
                                    alpha.apply_label(c2)))
        out.set(c, A.space.project(val))
    return out


def verify_twisting_cochain(alpha: GradedMap, C: DgCoalgebra, A: DgAlgebra,
                            pointed: bool = False) -> TwistingCochainReport:
    """Evaluate d_A α + α d_C + α⋆α on every basis element of C."""
    report = TwistingCochainReport(alpha, pointed)
    if alpha.degree != -1:
        report.failures.append(f"degree {alpha.degree} ≠ -1")
        return report
    field = alpha.field
    square = convolution_square(alpha, C, A)
    for c in C.space.labels():
        residue = A.d(alpha.apply_label(c))
        residue = vaddmul(field, residue, field.one(),
                          alpha(C.d.apply_label(c)))
        residue = vaddmul(field, residue, field.one(), square.apply_label(c))
        report.checked += 1
        if residue:
            report.failures.append(
                f"MC residue at {label_str(c)}: {A.space.render(residue)}")
    if pointed:
        if C.atom is None or A.aug is None:
            report.failures.append("pointed check needs pointed (co)algebras")
            return report
        if alpha.apply_label(C.atom):
            report.failures.append("α(e_C) ≠ 0")
        for c in C.space.labels():
            v = A.augmentation(alpha.apply_label(c))
            if not field.is_zero(v):
                report.failures.append(f"ε_A α ≠ 0 at {label_str(c)}")
                break
    return report


# -- bar construction --------------------------------------------------------------------


def s_label(a) -> tuple:
    return susp_label(1, a)


def s_inv_label(c) -> tuple:
    return susp_label(-1, c)


@dataclass
class BarConstruction:
    coalgebra: DgCoalgebra
    algebra: DgAlgebra              # the input A
    convention: str
    d_int: GradedMap
    d_ext: GradedMap
    generators: list


def bar(A: DgAlgebra, trunc: Truncation,
        convention: str = MINUS) -> BarConstruction:
    """B A = (T^c(s A₋), d^int - d^ext) (minus is the default convention)."""
    if A.aug is None:
        raise AlgebraError("bar needs an augmented algebra")
    field = A.field
    reduced = A.reduced_basis()
    generators = [(s_label(a), A.space.degree_of(a) + 1) for a in reduced]
    base = tensor_coalgebra(field, generators, trunc, name="BA")
    space = base.space

    phi_int: dict = {}
    phi_ext: dict = {}
    for a in reduced:
        w = word_label((s_label(a),))
        val = {s_label(a2): coeff
               for a2, coeff in A.d.apply_label(a).items()}
        if val:
            phi_int[w] = vscale(field, field.of(-1), val)
    for a in reduced:
        for b in reduced:
            w = word_label((s_label(a), s_label(b)))
            prod = A._pair(a, b)
            val = {}
            sign = field.sign(A.space.degree_of(a))
            for m, coeff in prod.items():
                if m in set(reduced):
                    val[s_label(m)] = field.mul(sign, coeff)
            if val:
                phi_ext[w] = val
    d_int = coextend_coderivation(space, generators, phi_int, -1)
    d_ext = coextend_coderivation(space, generators, phi_ext, -1)
    sign = field.of(-1) if convention == MINUS else field.one()
    d = d_int.add(d_ext.scale(sign))
    coalg = DgCoalgebra(DgSpace(space, d), base.comult, base.counit,
                        atom=UNIT_WORD, name=f"B({A.name})")
    return BarConstruction(coalg, A, convention, d_int, d_ext, generators)


@dataclass
class CobarConstruction:
    algebra: DgAlgebra
    coalgebra: DgCoalgebra          # the input C
    convention: str
    d_int: GradedMap
    d_ext: GradedMap
    generators: list
    reduced: ReducedCoalgebra


def cobar(C: DgCoalgebra, trunc: Truncation,
          convention: str = PLUS) -> CobarConstruction:
    """Ω C = (T(s⁻¹ C₋), d^int + d^ext) (plus is the default convention)."""
    R = ReducedCoalgebra(C)
    field = C.field
    gens = []
    for lab in R.space.labels():
        x = lab[1]
        gens.append((s_inv_label(x), C.space.degree_of(x) - 1))

    phi_int: dict = {}
    phi_ext: dict = {}
    for lab in R.space.labels():
        x = lab[1]
        val_int: dict = {}
        for lab2, coeff in R.d.apply_label(lab).items():
            val_int[word_label((s_inv_label(lab2[1]),))] = field.neg(coeff)
        if val_int:
            phi_int[s_inv_label(x)] = val_int
        val_ext: dict = {}
        for t, coeff in R.comult.apply_label(lab).items():
            _, r1, r2 = t
            c1, c2 = r1[1], r2[1]
            sign = field.sign(1 + C.space.degree_of(c1))
            w = word_label((s_inv_label(c1), s_inv_label(c2)))
            val_ext = vaddmul(field, val_ext, field.mul(sign, coeff),
                              {w: field.one()})
        if val_ext:
            phi_ext[s_inv_label(x)] = val_ext

    base = tensor_algebra(field, gens, trunc, augmented=True,
                          name=f"Ω({C.name})")
    space = base.space
    d_int = extend_derivation(gens, phi_int, space, -1)
    d_ext = extend_derivation(gens, phi_ext, space, -1)
    sign = field.one() if convention == PLUS else field.of(-1)
    d = d_int.add(d_ext.scale(sign))
    dg = DgSpace(space, d, d_raises=1)
    alg = DgAlgebra(dg, base._pair, base.unit, base.aug,
                    name=f"Ω({C.name})")
    return CobarConstruction(alg, C, convention, d_int, d_ext, gens, R)


def anticommutator_issues(d1: GradedMap, d2: GradedMap,
                          space: GradedSpace) -> list:
    """Witnesses of d1d2 + d2d1 ≠ 0 (both degree -1), window-checkable only."""
    field = space.field
    out = []
    for lab in space.labels():
        if space.degree_of(lab) - 2 < space.window.degree_min:
            continue
        r = vaddmul(field, d1(d2.apply_label(lab)), field.one(),
                    d2(d1.apply_label(lab)))
        if r:
            out.append(lab)
    return out


# -- universal cochains ---------------------------------------------------------------------


def universal_bar_cochain(b: BarConstruction) -> GradedMap:
    """β: B A → A, sa ↦ -a (default convention only)."""
    if b.convention != MINUS:
        raise ConventionMismatch(
            "with the plus convention the universal cochain is -β")
    A = b.algebra
    field = A.field
    beta = GradedMap(b.coalgebra.space, A.space, -1)
    for w in b.coalgebra.space.labels():
        syms = word_syms(w)
        if len(syms) == 1:
            a = syms[0][2]
            beta.set(w, {a: field.of(-1)})
    return beta


def universal_cobar_cochain(c: CobarConstruction) -> GradedMap:
    """ω: C → Ω C, c ↦ s⁻¹c on C₋ and atom ↦ 0 (default convention only)."""
    if c.convention != PLUS:
        raise ConventionMismatch(
            "with the minus convention the universal cochain is -ω")
    C = c.coalgebra
    field = C.field
    omega = GradedMap(C.space, c.algebra.space, -1)
    for x in C.space.labels():
        if x == C.atom:
            continue
        omega.set(x, c.algebra.space.project(
            {word_label((s_inv_label(x),)): field.one()}))
    return omega


# -- bar-cobar adjunction transforms ------------------------------------------------------------


@dataclass
class AdjunctionResult:
    to_algebra: GradedMap           # g: Ω C → A
    to_coalgebra: GradedMap         # f: C → B A
    issues: list


def cochain_to_algebra_map(alpha: GradedMap, cob: CobarConstruction,
                           A: DgAlgebra) -> GradedMap:
    """g: Ω C → A, multiplicative extension of s⁻¹c ↦ ±α(c).

    Under the default plus convention the sign is +; with the minus-sign
    cobar differential the universal cochain is -ω, so generators map
    through -α instead.
    """
    field = A.field
    space = cob.algebra.space
    sign = field.one() if cob.convention == PLUS else field.of(-1)
    g = GradedMap(space, A.space, 0)
    for w in space.labels():
        val = dict(A.unit)
        for sym in word_syms(w):
            x = sym[2]
            val = A.product(val, vscale(field, sign, alpha.apply_label(x)))
        g.set(w, A.space.project(val))
    return g


def cochain_to_coalgebra_map(alpha: GradedMap, C: DgCoalgebra,
                             b: BarConstruction) -> GradedMap:
    """f: C → B A with cogenerator component φ = ∓s∘α (so extract gives α).

    f(e) = 1 and f(x) = Σ_{n≥1} φ^{⊗n} Δ₋^{(n)}(x) on the reduced part.
    Under the default minus convention φ = -sα; under the plus convention
    the universal cochain is -β, so φ = +sα.
    """
    field = C.field
    R = ReducedCoalgebra(C)
    space = b.coalgebra.space
    cap = space.window.weight_cap
    one = field.one()
    phi_sign = field.of(-1) if b.convention == MINUS else field.one()
    f = GradedMap(C.space, space, 0)
    for x in C.space.labels():
        if x == C.atom:
            f.set(x, {UNIT_WORD: one})
            continue
        img: dict = {}
        eps = C.counit.get(x, field.zero())
        if not field.is_zero(eps):
            img[UNIT_WORD] = eps
        terms = {(red_label(x),): one}
        n = 1
        while terms and n <= cap:
            for key, c in terms.items():
                pieces = []
                for lab in key:
                    val = alpha(R.include({lab: one}))
                    pieces.append([(s_label(a), field.mul(phi_sign, cv))
                                   for a, cv in val.items()])
                for combo in itertools.product(*pieces):
                    syms = tuple(s for s, _ in combo)
                    coeff = c
                    for _, cc in combo:
                        coeff = field.mul(coeff, cc)
                    w = word_label(syms)
                    if w in space:
                        img = vaddmul(field, img, coeff, {w: one})
            new: dict = {}
            for key, c in terms.items():
                for t, c2 in R.comult.apply_label(key[-1]).items():
                    _, a2, b2 = t
                    new = vaddmul(field, new, field.mul(c, c2),
                                  {key[:-1] + (a2, b2): one})
            terms = new
            n += 1
        f.set(x, img)
    return f


def extract_from_algebra_map(g: GradedMap, cob: CobarConstruction,
                             C: DgCoalgebra) -> GradedMap:
    """α(c) = ±g(s⁻¹c), inverse to cochain_to_algebra_map."""
    field = g.field
    sign = field.one() if cob.convention == PLUS else field.of(-1)
    alpha = GradedMap(C.space, g.target, -1)
    for x in C.space.labels():
        if x == C.atom:
            continue
        w = word_label((s_inv_label(x),))
        if w in cob.algebra.space:
            alpha.set(x, vscale(field, sign, g.apply_label(w)))
    return alpha


def extract_from_coalgebra_map(f: GradedMap, b: BarConstruction,
                               C: DgCoalgebra) -> GradedMap:
    """α = ∓(unwrap ∘ p ∘ f): the cogenerator component, sign-normalized
    so the transform/extract roundtrip is the identity."""
    A = b.algebra
    field = A.field
    phi_sign = field.of(-1) if b.convention == MINUS else field.one()
    alpha = GradedMap(C.space, A.space, -1)
    for x in C.space.labels():
        val: dict = {}
        for w, coeff in f.apply_label(x).items():
            syms = word_syms(w)
            if len(syms) == 1:
                a = syms[0][2]
                val = vaddmul(field, val, field.mul(phi_sign, coeff),
                              {a: field.one()})
        alpha.set(x, val)
    return alpha


def algebra_map_issues(g: GradedMap, source: DgAlgebra, target: DgAlgebra,
                       check_weight_cap: bool = True) -> list[str]:
    """Multiplicativity, unit, augmentation and chain conditions for g."""
    field = g.field
    issues = []
    if source.unit is not None and g(source.unit) != target.unit:
        issues.append("g(1) ≠ 1")
    cap = source.space.window.weight_cap
    for a in source.space.labels():
        for b in source.space.labels():
            wa = source.space.weight_of(a)
            wb = source.space.weight_of(b)
            if check_weight_cap and wa is not None and wb is not None \
                    and wa + wb > cap:
                continue
            lhs = g(source._pair(a, b))
            rhs = target.product(g.apply_label(a), g.apply_label(b))
            if lhs != rhs:
                issues.append(
                    f"g not multiplicative at ({label_str(a)},{label_str(b)})")
                return issues
    for a in source.space.labels():
        wa = source.space.weight_of(a)
        if check_weight_cap and wa is not None \
                and wa + source.dg.d_raises > cap:
            continue
        if source.space.degree_of(a) - 1 < source.space.window.degree_min:
            continue
        if g(source.d.apply_label(a)) != target.d(g.apply_label(a)):
            issues.append(f"g not a chain map at {label_str(a)}")
            return issues
    return issues


def coalgebra_map_issues(f: GradedMap, source: DgCoalgebra,
                         target: DgCoalgebra) -> list[str]:
    """Comultiplicativity, counit and chain conditions for f."""
    field = f.field
    issues = []
    TT = target.comult.target
    for x in source.space.labels():
        lhs = target.comult(f.apply_label(x))
        rhs: dict = {}
        for t, coeff in source.comult.apply_label(x).items():
            _, x1, x2 = t
            for y1, c1 in f.apply_label(x1).items():
                for y2, c2 in f.apply_label(x2).items():
                    lab = tensor_label(y1, y2)
                    if lab in TT:
                        rhs = vaddmul(field, rhs,
                                      field.mul(coeff, field.mul(c1, c2)),
                                      {lab: field.one()})
        if lhs != rhs:
            issues.append(f"f not comultiplicative at {label_str(x)}")
            return issues
        ex = source.counit.get(x, field.zero()) if source.counit else None
        if ex is not None:
            fx = target.counit_of(f.apply_label(x))
            if fx != ex:
                issues.append(f"f does not preserve counit at {label_str(x)}")
                return issues
        if f(source.d.apply_label(x)) != target.d(f.apply_label(x)):
            issues.append(f"f not a chain map at {label_str(x)}")
            return issues
    return issues


def adjunction_transforms(alpha: GradedMap, C: DgCoalgebra, A: DgAlgebra,
                          b: BarConstruction,
                          cob: CobarConstruction) -> AdjunctionResult:
    """α ↦ (g: ΩC → A, f: C → B A), with both map conditions checked."""
    g = cochain_to_algebra_map(alpha, cob, A)
    f = cochain_to_coalgebra_map(alpha, C, b)
    issues = []
    issues.extend("Ω-side " + s for s in algebra_map_issues(g, cob.algebra, A))
    issues.extend("B-side " + s
                  for s in coalgebra_map_issues(f, C, b.coalgebra))
    back_g = extract_from_algebra_map(g, cob, C)
    if not back_g.equals(alpha):
        issues.append("extract(g) ≠ α")
    back_f = extract_from_coalgebra_map(f, b, C)
    if not back_f.equals(alpha):
        issues.append("extract(f) ≠ α")
    return AdjunctionResult(g, f, issues)


# -- exhaustive enumerations over F_p ----------------------------------------------------------


def _assignments(field: Field, slots: int, limit: int):
    if field.p is None:
        raise EnumerationTooLarge("enumeration needs a finite field")
    if slots and field.p ** slots > limit:
        raise EnumerationTooLarge(
            f"{field.p}^{slots} candidates exceed the limit {limit}")
    return itertools.product(range(field.p), repeat=slots)


def enumerate_twisting_cochains(C: DgCoalgebra, A: DgAlgebra,
                                pointed: bool = True,
                                limit: int = 1 << 20) -> list[GradedMap]:
    """All (pointed) twisting cochains C → A by brute force over F_p."""
    field = C.field
    c_labels = [x for x in C.space.labels() if x != C.atom] if pointed \
        else C.space.labels()
    a_basis = A.reduced_basis() if pointed else A.space.labels()
    slots = []
    for x in c_labels:
        for b in a_basis:
            if A.space.degree_of(b) == C.space.degree_of(x) - 1:
                slots.append((x, b))
    out = []
    for combo in _assignments(field, len(slots), limit):
        alpha = GradedMap(C.space, A.space, -1)
        cols: dict = {}
        for (x, b), cv in zip(slots, combo):
            if cv:
                cols.setdefault(x, {})[b] = field.of(cv)
        for x, vec in cols.items():
            alpha.set(x, vec)
        if verify_twisting_cochain(alpha, C, A, pointed=pointed).passed:
            out.append(alpha)
    return out


def enumerate_pointed_algebra_maps(cob: CobarConstruction, A: DgAlgebra,
                                   limit: int = 1 << 20) -> list[GradedMap]:
    """All pointed dg-algebra maps Ω C → A: free on generators, so a map is
    an assignment of generator images in A₋ (same degree) satisfying the
    chain condition; multiplicativity is then automatic."""
    field = A.field
    gens = cob.generators
    a_red = A.reduced_basis()
    slots = []
    for g, dg in gens:
        for b in a_red:
            if A.space.degree_of(b) == dg:
                slots.append((g, b))
    source = cob.algebra
    out = []
    for combo in _assignments(field, len(slots), limit):
        images: dict = {}
        for (g, b), cv in zip(slots, combo):
            if cv:
                images.setdefault(g, {})[b] = field.of(cv)
        g_map = GradedMap(source.space, A.space, 0)
        for w in source.space.labels():
            val = dict(A.unit)
            for sym in word_syms(w):
                val = A.product(val, images.get(sym, {}))
            g_map.set(w, A.space.project(val))
        # chain condition on generators determines it everywhere
        ok = True
        for g, _ in gens:
            w = word_label((g,))
            if g_map(source.d.apply_label(w)) != A.d(g_map.apply_label(w)):
                ok = False
                break
        if ok:
            out.append(g_map)
    return out


def enumerate_pointed_coalgebra_maps(C: DgCoalgebra, b: BarConstruction,
                                     limit: int = 1 << 20) -> list[GradedMap]:
    """All pointed dg-coalgebra maps C → B A by direct brute force."""
    field = C.field
    BA = b.coalgebra
    c_labels = [x for x in C.space.labels() if x != C.atom]
    slots = []
    for x in c_labels:
        for w in BA.space.labels():
            if w == UNIT_WORD:
                continue
            if BA.space.degree_of(w) == C.space.degree_of(x):
                slots.append((x, w))
    out = []
    for combo in _assignments(field, len(slots), limit):
        f = GradedMap(C.space, BA.space, 0)
        f.set(C.atom, {UNIT_WORD: field.one()})
        cols: dict = {}
        for (x, w), cv in zip(slots, combo):
            if cv:
                cols.setdefault(x, {})[w] = field.of(cv)
        for x in c_labels:
            vec = dict(cols.get(x, {}))
            eps = C.counit.get(x, field.zero())
            if not field.is_zero(eps):
                vec[UNIT_WORD] = eps
            f.set(x, vec)
        if not coalgebra_map_issues(f, C, BA):
            out.append(f)
    return out


# -- the sign-convention isomorphism π ------------------------------------------------------------


def length_sign_automorphism(space: GradedSpace) -> GradedMap:
    """π: multiply length-n words by (-1)^n."""
    field = space.field
    pi = GradedMap(space, space, 0)
    for lab in space.labels():
        pi.set(lab, {lab: field.sign(len(word_syms(lab)))})
    return pi


def sign_convention_report(d_int: GradedMap, d_ext: GradedMap,
                           space: GradedSpace, raises_length: bool) -> list:
    """Witnesses that π⁻¹(d^int+d^ext)π ≠ d^int-d^ext (empty = verified)."""
    field = space.field
    pi = length_sign_automorphism(space)
    plus = d_int.add(d_ext)
    minus = d_int.add(d_ext.scale(field.of(-1)))
    out = []
    cap = space.window.weight_cap
    for lab in space.labels():
        w = space.weight_of(lab)
        if raises_length and w is not None and w + 1 > cap:
            continue
        if space.degree_of(lab) - 1 < space.window.degree_min:
            continue
        lhs = pi(plus(pi.apply_label(lab)))   # π = π⁻¹
        rhs = minus.apply_label(lab)
        if lhs != rhs:
            out.append(lab)
    return out


# -- Hopf structures on bar and cobar -------------------------------------------------------------


def hopf_on_cobar(cob: CobarConstruction) -> tuple[GradedMap, list[str]]:
    """Coshuffle coproduct on Ω C for cocommutative C; errors carry a witness."""
    C = cob.coalgebra
    witness = C.is_cocommutative()
    if witness is not None:
        raise NotCocommutative(
            f"Δ not cocommutative at {label_str(witness)}")
    space = cob.algebra.space
    degree_of = {g: d for g, d in cob.generators}
    comult = coshuffle_comult(space, degree_of)
    counit = {UNIT_WORD: space.field.one()}
    co = DgCoalgebra(DgSpace(space, cob.algebra.d), comult, counit,
                     atom=UNIT_WORD, name="ΩC-coshuffle")
    issues = co.verify(check_d_squared=False)
    issues.extend(bialgebra_compat_issues(cob.algebra, comult, counit))
    return comult, issues


def hopf_on_bar(b: BarConstruction) -> tuple[GradedMap, list[str]]:
    """Shuffle product on B A for commutative A; errors carry a witness."""
    A = b.algebra
    field = A.field
    for x in A.space.labels():
        for y in A.space.labels():
            sign = field.sign(A.space.degree_of(x) * A.space.degree_of(y))
            if A._pair(x, y) != vscale(field, sign, A._pair(y, x)):
                raise NotCommutative(
                    f"product not commutative at ({label_str(x)},{label_str(y)})")
    from .coalgebras import shuffle_product
    mu = shuffle_product(b.coalgebra)
    issues = []
    # μ is a chain map for the full bar differential
    T = mu.source
    d = b.coalgebra.d
    from .graded import strength_tensor, identity_map
    dT = strength_tensor(d, identity_map(b.coalgebra.space)).add(
        strength_tensor(identity_map(b.coalgebra.space), d))
    for lab in T.labels():
        lhs = d(mu.apply_label(lab))
        rhs = mu(dT.apply_label(lab))
        if lhs != rhs:
            issues.append(f"shuffle product not a chain map at {label_str(lab)}")
            break
    # unit law and associativity on the window
    one = T.field.one()
    for w in b.coalgebra.space.labels():
        t = tensor_label(UNIT_WORD, w)
        if t in T and mu.apply_label(t) != {w: one}:
            issues.append(f"shuffle unit law fails at {label_str(w)}")
            break
    return mu, issues
