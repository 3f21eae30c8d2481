"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Run with `pytest tests/test_acceptance.py -s` to see one line per criterion.
"""

import itertools
import random
import time
from math import comb

from sweedler.scalars import QQ, Field
from sweedler.graded import (Truncation, GradedSpace, GradedMap, tensor_space,
                             tensor_label, hom_label, koszul_swap, lambda1,
                             lambda2, uncurry1, uncurry2, graded_dual,
                             transpose)
from sweedler.complexes import DgSpace, check_square_zero, homology
from sweedler.algebras import (tensor_algebra, normal_forms, PresentedAlgebra,
                               word_label, word_syms, UNIT_WORD,
                               omega_bimodule, DgAlgebra)
from sweedler.coalgebras import (tensor_coalgebra, odd_binomial,
                                 DgCoalgebra)
from sweedler.sweedler_ops import (sweedler_product, example_construction,
                                   sweedler_hom_free, sweedler_dual,
                                   corestriction_identity_report,
                                   double_dual_compare,
                                   primitive_coalgebra, matrix_algebra)
from sweedler.barcobar import (mc_algebra, verify_mc, bar, cobar,
                               universal_bar_cochain, universal_cobar_cochain,
                               verify_twisting_cochain, adjunction_transforms,
                               anticommutator_issues, hopf_on_bar,
                               hopf_on_cobar, enumerate_twisting_cochains,
                               enumerate_pointed_algebra_maps,
                               enumerate_pointed_coalgebra_maps, MINUS, PLUS,
                               s_label, s_inv_label)
from sweedler.presets import load_preset
from sweedler.linalg import vaddmul, vscale, rank_of_columns, RowSpace


def announce(number: int, passed: bool, text: str) -> None:
    mark = "PASS" if passed else "FAIL"
    print(f"criterion {number:2d}: {mark} — {text}")
    assert passed, f"criterion {number}: {text}"


# -- helpers shared with the module tests ---------------------------------------------


def named(dims, prefix, tr) -> GradedSpace:
    X = GradedSpace(QQ, tr)
    for deg, count in dims.items():
        for i in range(count):
            X.add(f"{prefix}{deg}_{i}", deg)
    return X


def random_map(rng, X, Y, degree) -> GradedMap:
    f = GradedMap(X, Y, degree)
    for x in X.labels():
        want = X.degree_of(x) + degree
        img = {y: QQ.of(rng.randint(-2, 2)) for y in Y.basis(want)}
        f.set(x, {k: v for k, v in img.items() if v})
    return f


def square_zero_with_d(field, tr) -> DgAlgebra:
    gens = [("a", 0), ("b", 1)]
    rels = [{word_label((g1, g2)): field.one()} for g1, _ in gens
            for g2, _ in gens]
    d_gen = {"b": {word_label(("a",)): field.one()}}
    return normal_forms(PresentedAlgebra(
        field, gens, rels, d_gen, tr,
        aug_gen={"a": field.zero(), "b": field.zero()}))


# -- criterion 1: the sign substrate -----------------------------------------------------


def test_criterion_1_sign_substrate():
    tr = Truncation(-8, 8, 8)
    ok = True
    X = named({0: 2, 1: 2, -1: 2, 2: 1, 3: 1}, "a", tr)   # total dim 8
    Y = named({0: 2, 1: 2, -2: 2, 2: 1, 4: 1}, "b", tr)
    s1, s2 = koszul_swap(X, Y), koszul_swap(Y, X)
    for x in X.labels():
        for y in Y.labels():
            lab = tensor_label(x, y)
            if lab not in s1.source:
                continue
            out = s1.apply_label(lab)
            sign = QQ.sign(X.degree_of(x) * Y.degree_of(y))
            ok &= out == {tensor_label(y, x): sign}
            ok &= s2(out) == {lab: QQ.one()}
    # λ roundtrips on random homogeneous maps of each degree
    rng = random.Random(101)
    Z = named({0: 2, 1: 2, 2: 2, 3: 1, -1: 1}, "c", tr)
    XY = tensor_space(X, Y)
    for degree in (-1, 0, 1, 2):
        for _ in range(3):
            f = random_map(rng, XY, Z, degree)
            ok &= uncurry1(lambda1(f, X, Y), X, Y, Z).equals(f)
            ok &= uncurry2(lambda2(f, X, Y), X, Y, Z).equals(f)
    # transpose composition sign, exhaustively on elementary maps
    Xd, Yd, Zd = graded_dual(X), graded_dual(Y), graded_dual(Z)
    for x in X.labels():
        for y in Y.labels():
            for z in Z.labels():
                df = Y.degree_of(y) - X.degree_of(x)
                dg = Z.degree_of(z) - Y.degree_of(y)
                f = GradedMap(X, Y, df)
                f.set(x, {y: QQ.one()})
                g = GradedMap(Y, Z, dg)
                g.set(y, {z: QQ.one()})
                lhs = transpose(g.compose(f), Xd, Zd)
                rhs = transpose(f, Xd, Yd).compose(
                    transpose(g, Yd, Zd)).scale(QQ.sign(df * dg))
                ok &= lhs.equals(rhs)
    announce(1, ok, "Koszul involution, λ¹/λ² roundtrips, transpose sign "
                    "(exhaustive, total dim ≤ 8, exact)")


# -- criterion 2: the Maurer-Cartan algebra ------------------------------------------------


def test_criterion_2_mc_algebra():
    mc = mc_algebra(QQ, Truncation(-10, 0, 10))
    issues = verify_mc(mc)        # du+u²=0, Hopf axioms, S⋆id=eε to weight 9
    ok = issues == []
    alg = mc.algebra
    for n in range(11):
        d = alg.d.apply_label(word_label(("u",) * n))
        if n % 2 == 0:
            ok &= d == {}
        elif n < 10:
            ok &= d == {word_label(("u",) * (n + 1)): QQ.of(-1)}
    h = homology(alg.dg)
    for n, e in h.items():
        if e.trusted:
            ok &= e.dim == (1 if n == 0 else 0)
    ok &= h[0].trusted and h[0].dim == 1
    announce(2, ok, "mc: du+u²=0, d(uⁿ) parity for n ≤ 10, H(mc)=F in "
                    "degree 0, Hopf axioms incl. S⋆id=eε to weight 9")


# -- criterion 3: odd binomials -------------------------------------------------------------


def test_criterion_3_odd_binomials():
    table = {0: [1], 1: [1, 1], 2: [1, 0, 1], 3: [1, 1, 1, 1],
             4: [1, 0, 2, 0, 1], 5: [1, 1, 2, 2, 1, 1],
             6: [1, 0, 3, 0, 3, 0, 1], 7: [1, 1, 3, 3, 3, 3, 1, 1],
             8: [1, 0, 4, 0, 6, 0, 4, 0, 1]}
    ok = all([odd_binomial(n, k) for k in range(n + 1)] == row
             for n, row in table.items())
    ok &= odd_binomial(8, 2) == 4 and odd_binomial(8, 4) == 6
    ok &= all(odd_binomial(2 * n, 2 * k) == comb(n, k)
              for n in range(7) for k in range(n + 1))
    announce(3, ok, "odd binomial table rows n=0..8 and ⟨2n,2k⟩=C(n,k) "
                    "for n ≤ 6, exact")


# -- criterion 4: bar/cobar well-formedness ---------------------------------------------------


def random_pointed_dg_algebra(rng, field, tr, idx) -> DgAlgebra:
    gens = []
    pairs = []
    for i in range(rng.randint(2, 4)):
        deg = rng.randint(-1, 2)
        gens.append((f"r{idx}_{i}", deg))
        if rng.random() < 0.6:
            gens.append((f"s{idx}_{i}", deg - 1))
            pairs.append((f"r{idx}_{i}", f"s{idx}_{i}",
                          field.of(rng.choice([1, -1, 2]))))
    rels = [{word_label((g1, g2)): field.one()} for g1, _ in gens
            for g2, _ in gens]
    d_gen = {a: {word_label((b,)): c} for a, b, c in pairs}
    return normal_forms(PresentedAlgebra(
        field, gens, rels, d_gen, tr,
        aug_gen={g: field.zero() for g, _ in gens}))


def random_pointed_dg_coalgebra(rng, field, tr, idx) -> DgCoalgebra:
    space = GradedSpace(field, tr)
    e = f"e{idx}"
    space.add(e, 0)
    names, pairs = [], []
    for i in range(rng.randint(2, 4)):
        deg = rng.randint(-1, 2)
        names.append((f"c{idx}_{i}", deg))
        if rng.random() < 0.5:
            names.append((f"z{idx}_{i}", deg - 1))
            pairs.append((f"c{idx}_{i}", f"z{idx}_{i}",
                          field.of(rng.choice([1, -1]))))
    for nm, deg in names:
        space.add(nm, deg)
    TT = tensor_space(space, space)
    comult = GradedMap(space, TT, 0)
    comult.set(e, {tensor_label(e, e): field.one()})
    for nm, _ in names:
        comult.set(nm, {tensor_label(nm, e): field.one(),
                        tensor_label(e, nm): field.one()})
    d = GradedMap(space, space, -1)
    for a, b, c in pairs:
        d.set(a, {b: c})
    return DgCoalgebra(DgSpace(space, d), comult, {e: field.one()}, atom=e)


def test_criterion_4_bar_cobar_well_formed():
    rng = random.Random(1234)
    tr = Truncation(-4, 6, 4)
    ok = True
    for k in range(5):
        A = random_pointed_dg_algebra(rng, QQ, tr, k)
        ok &= A.verify() == []
        b = bar(A, tr)
        ok &= check_square_zero(b.coalgebra.dg).passed
        ok &= anticommutator_issues(b.d_int, b.d_ext, b.coalgebra.space) == []
        ok &= check_square_zero(DgSpace(b.coalgebra.space, b.d_int)).passed
        ok &= check_square_zero(DgSpace(b.coalgebra.space, b.d_ext)).passed
    for k in range(5):
        C = random_pointed_dg_coalgebra(rng, QQ, tr, k)
        ok &= C.verify() == []
        cb = cobar(C, tr)
        ok &= check_square_zero(cb.algebra.dg).passed
        ok &= anticommutator_issues(cb.d_int, cb.d_ext,
                                    cb.algebra.space) == []
        ok &= check_square_zero(
            DgSpace(cb.algebra.space, cb.d_int, d_raises=1)).passed
        ok &= check_square_zero(
            DgSpace(cb.algebra.space, cb.d_ext, d_raises=1)).passed
    announce(4, ok, "d²=0 for bar of 5 random dg-algebras and cobar of 5 "
                    "random dg-coalgebras; d^int/d^ext anticommute, exact")


# -- criterion 5: universal cochains -----------------------------------------------------------


def test_criterion_5_universal_cochains():
    tr = Truncation(-6, 6, 6)
    A = load_preset("free-algebra:x=1").build(QQ, tr)
    b = bar(A, tr, MINUS)
    beta = universal_bar_cochain(b)
    ok = verify_twisting_cochain(beta, b.coalgebra, A, pointed=True).passed
    C = load_preset("diagonal-coalgebra:2").build(QQ, Truncation(-4, 4, 4))
    cb = cobar(C, Truncation(-4, 4, 4), PLUS)
    omega = universal_cobar_cochain(cb)
    ok &= verify_twisting_cochain(omega, C, cb.algebra, pointed=True).passed
    b_plus = bar(A, tr, PLUS)
    ok &= not verify_twisting_cochain(beta, b_plus.coalgebra, A,
                                      pointed=True).passed
    ok &= verify_twisting_cochain(beta.neg(), b_plus.coalgebra, A,
                                  pointed=True).passed
    announce(5, ok, "β and ω pass under the default convention; β fails "
                    "and -β passes under the plus convention, exact")


# -- criterion 6: the classical adjunction at desk scale --------------------------------------


def test_criterion_6_classical_adjunction_desk_scale():
    started = time.time()
    F2 = Field(2)
    tr = Truncation(-3, 3, 4)
    pairs = [
        (load_preset("primitive-coalgebra:1").build(F2, tr),
         load_preset("dual-numbers").build(F2, tr)),
        (load_preset("primitive-coalgebra:2").build(F2, tr),
         square_zero_with_d(F2, tr)),
        (tensor_coalgebra(F2, [("x", 1)], Truncation(-3, 3, 2)),
         square_zero_with_d(F2, tr)),
    ]
    ok = True
    for C, A in pairs:
        tws = enumerate_twisting_cochains(C, A, pointed=True)
        b = bar(A, tr)
        cb = cobar(C, tr)
        gs = enumerate_pointed_algebra_maps(cb, A)
        fs = enumerate_pointed_coalgebra_maps(C, b)
        ok &= len(tws) == len(gs) == len(fs)
        seen_g, seen_f = set(), set()
        for alpha in tws:
            res = adjunction_transforms(alpha, C, A, b, cb)
            ok &= res.issues == []
            seen_g.add(_key(res.to_algebra))
            seen_f.add(_key(res.to_coalgebra))
        ok &= seen_g == {_key(g) for g in gs}
        ok &= seen_f == {_key(f) for f in fs}
    elapsed = time.time() - started
    ok &= elapsed <= 60
    announce(6, ok, f"F2 desk scale: |Tw| = |dgAlg(ΩC,A)| = |dgCoalg(C,BA)| "
                    f"with identity roundtrips ({elapsed:.1f}s ≤ 60s)")


def _key(f: GradedMap):
    return frozenset((k, frozenset(v.items())) for k, v in f.columns.items()
                     if v)


# -- criterion 7: Sweedler product isomorphisms --------------------------------------------------


def dims_by_dw(space, cap=None, weight=None):
    out = {}
    for lab in space.labels():
        w = weight(lab) if weight else space.weight_of(lab)
        if cap is not None and w is not None and w > cap:
            continue
        out[(space.degree_of(lab), w)] = out.get((space.degree_of(lab), w),
                                                 0) + 1
    return out


def test_criterion_7_sweedler_product_isomorphisms():
    ok = True
    # (a) C▷T(X) vs T(C⊗X), dims per (degree, weight ≤ 4)
    tr = Truncation(-6, 6, 4)
    C = primitive_coalgebra(QQ, tr, degree=1)
    A = tensor_algebra(QQ, [("x", 1)], tr)
    sp = sweedler_product(C, A, tr)
    oracle = tensor_algebra(QQ, [("ex", 1), ("dx", 2)], tr)
    ok &= dims_by_dw(sp.algebra.space, cap=4) == dims_by_dw(oracle.space,
                                                            cap=4)
    # (b) F{1,2}▷A vs the free-product alternating-word oracle, weight ≤ 3
    tr3 = Truncation(-6, 6, 3)
    CI = load_preset("diagonal-coalgebra:2").build(QQ, tr3)
    AD = load_preset("dual-numbers").build(QQ, tr3)
    sp2 = sweedler_product(CI, AD, tr3, verify=True)
    want = {(0, 0): 1}
    for k in range(1, 4):
        want[(0, k)] = 2          # two alternating words per length
    ok &= dims_by_dw(sp2.algebra.space, cap=3) == want
    # (c) Fδ₊▷A vs T_A(SⁿΩ_A) with Ω = ker(m), for the dual numbers
    for n in (0, 1):
        ok &= _derham_comparison(n)
    announce(7, ok, "C▷T(X) = T(C⊗X) dims; F{1,2}▷A = free product dims; "
                    "Fδ₊▷A = T_A(SⁿΩ_A) via the independent ker(m) oracle")


def _derham_comparison(n: int) -> bool:
    W = 2
    trA = Truncation(-6, 6, 6)
    A = load_preset("dual-numbers").build(QQ, trA)
    om = omega_bimodule(A)
    sp = example_construction("diff_alg", A, Truncation(-6, 6, 2 * W + 2),
                              n=n)

    def delta_weight(lab):
        return sum(1 for s in word_syms(lab) if s[1] == "delta")

    got = {}
    for lab in sp.algebra.space.labels():
        w = delta_weight(lab)
        if w <= W:
            key = (sp.algebra.space.degree_of(lab), w)
            got[key] = got.get(key, 0) + 1
    # oracle dims: A at weight 0, SⁿΩ^{⊗_A k} at weight k
    want = {(0, 0): 2}
    eps = word_label(("eps",))
    om_basis = om.space.labels()
    for k in range(1, W + 1):
        words = list(itertools.product(om_basis, repeat=k))
        rs = RowSpace(QQ, words)
        for i in range(k - 1):
            for left in itertools.product(om_basis, repeat=i):
                for right in itertools.product(om_basis, repeat=k - i - 2):
                    for m1 in om_basis:
                        for m2 in om_basis:
                            rel = {}
                            for lab2, c in om.act_right({m1: QQ.one()},
                                                        eps).items():
                                rel = vaddmul(QQ, rel, c, {
                                    left + (lab2, m2) + right: QQ.one()})
                            # left action on SⁿΩ picks up (-1)^{n|ε|} = +1
                            for lab2, c in om.act_left(eps,
                                                       {m2: QQ.one()}).items():
                                rel = vaddmul(QQ, rel, QQ.neg(c), {
                                    left + (m1, lab2) + right: QQ.one()})
                            rs.add(rel)
        want[(k * n, k)] = want.get((k * n, k), 0) + len(words) - rs.rank
    return got == want


# -- criterion 8: the bridge (Thm about C▷mc and {mc,A}) -----------------------------------------


def _cobar_bridge(C, trunc) -> bool:
    """C▷•mc from the presentation engine coincides with the formulaic ΩC
    under s⁻¹ = u (weight-filtered to the comparable slice)."""
    field = C.field
    mc = mc_algebra(field, Truncation(trunc.degree_min, 0,
                                      trunc.weight_cap))
    sp = sweedler_product(C, mc.algebra, trunc, pointed=True)
    cb = cobar(C, trunc)
    u = word_label(("u",))
    one = field.one()

    def phi_gen(x):
        # s⁻¹x ↦ (-1)^{|x|} Φ((x - ε(x)e) ⊗ u)
        sgn = field.sign(C.space.degree_of(x))
        vec = sp.measuring.apply_label(tensor_label(x, u))
        eps = C.counit.get(x, field.zero())
        if not field.is_zero(eps):
            atom_part = sp.measuring.apply_label(tensor_label(C.atom, u))
            vec = vaddmul(field, vec, field.neg(eps), atom_part)
        return vscale(field, sgn, vec)

    Phi = GradedMap(cb.algebra.space, sp.algebra.space, 0)
    for w in cb.algebra.space.labels():
        val = dict(sp.algebra.unit)
        for sym in word_syms(w):
            val = sp.algebra.product(val, phi_gen(sym[2]))
        Phi.set(w, sp.algebra.space.project(val))
    cap = trunc.weight_cap
    # weight-filtered dimension comparison and bijectivity of Φ
    sp_dims, omega_dims = {}, {}
    for lab in sp.algebra.space.labels():
        w = sp.algebra.space.weight_of(lab)
        if w is not None and w <= cap:
            n = sp.algebra.space.degree_of(lab)
            sp_dims[n] = sp_dims.get(n, 0) + 1
    for lab in cb.algebra.space.labels():
        n = cb.algebra.space.degree_of(lab)
        omega_dims[n] = omega_dims.get(n, 0) + 1
    if sp_dims != omega_dims:
        return False
    for n in cb.algebra.space.degrees():
        cols = {lab: Phi.apply_label(lab)
                for lab in cb.algebra.space.basis(n)}
        r = rank_of_columns(field, cols, cb.algebra.space.basis(n),
                            sp.algebra.space.basis(n))
        if r != cb.algebra.space.dim(n):
            return False
    # differentials match on words whose image the window represents
    for w in cb.algebra.space.labels():
        if len(word_syms(w)) + 1 > cap:
            continue
        if Phi(cb.algebra.d.apply_label(w)) != \
                sp.algebra.d(Phi.apply_label(w)):
            return False
    return True


def _bar_bridge(A, trunc) -> bool:
    """{mc-source} Sweedler hom matches T^c(sA₋) with the corestriction
    identity, under s = u*."""
    field = A.field
    phi = {"u": {word_label(("u", "u")): field.of(-1)}}
    sh = sweedler_hom_free(field, [("u", -1)], A, trunc, pointed=True,
                           phi_der=phi)
    if corestriction_identity_report(sh, field, [("u", -1)], phi, A):
        return False
    b = bar(A, trunc)
    if sh.coalgebra.space.dims() != b.coalgebra.space.dims():
        return False
    Psi = GradedMap(b.coalgebra.space, sh.coalgebra.space, 0)
    for w in b.coalgebra.space.labels():
        syms = word_syms(w)
        exp = sum(A.space.degree_of(s[2]) for s in syms)
        new = tuple(hom_label("u", s[2]) for s in syms)
        Psi.set(w, {word_label(new): field.sign(exp)})
    for w in b.coalgebra.space.labels():
        if Psi(b.coalgebra.d.apply_label(w)) != \
                sh.coalgebra.d(Psi.apply_label(w)):
            return False
    return True


def test_criterion_8_bridge():
    ok = True
    tr = Truncation(-4, 4, 4)
    ok &= _cobar_bridge(load_preset("primitive-coalgebra:1").build(QQ, tr),
                        tr)
    ok &= _cobar_bridge(load_preset("diagonal-coalgebra:2").build(QQ, tr),
                        tr)
    ok &= _bar_bridge(load_preset("dual-numbers").build(QQ,
                                                        Truncation(-1, 6, 6)),
                      Truncation(-1, 6, 6))
    ok &= _bar_bridge(square_zero_with_d(QQ, Truncation(-4, 6, 4)),
                      Truncation(-4, 6, 4))
    announce(8, ok, "C▷•mc ≅ ΩC (presentation engine vs formula, s⁻¹=u) for "
                    "primitive and diagonal presets; {mc,A}-hom ≅ B A with "
                    "the corestriction identity (s=u*)")


# -- criterion 9: Hopf structures on (co)commutative inputs ---------------------------------------


def test_criterion_9_hopf_structures():
    ok = True
    tr = Truncation(-4, 4, 4)
    C = load_preset("primitive-coalgebra:1").build(QQ, tr)
    cb = cobar(C, tr)
    comult, issues = hopf_on_cobar(cb)
    ok &= issues == []
    g = word_label((s_inv_label("delta"),))
    ok &= comult.apply_label(g) == {tensor_label(g, UNIT_WORD): QQ.one(),
                                    tensor_label(UNIT_WORD, g): QQ.one()}
    A = load_preset("dual-numbers").build(QQ, Truncation(-1, 4, 4))
    b = bar(A, Truncation(-1, 4, 4))
    mu, issues2 = hopf_on_bar(b)
    ok &= issues2 == []
    # μ(sε, sε) expands to sε⊗sε + (-1)^{|sε||sε|} sε⊗sε = 0
    se = word_label((s_label(word_label(("eps",))),))
    ok &= mu.apply_label(tensor_label(se, se)) == {}
    announce(9, ok, "coshuffle bialgebra on ΩC (C = Fδ₊) and shuffle "
                    "bialgebra on B(F[ε]/ε²) to weight 4, exact")


# -- criterion 10: duality smoke test ---------------------------------------------------------------


def test_criterion_10_duality():
    ok = True
    tr = Truncation(-6, 6, 6)
    presets = [load_preset("dual-numbers").build(QQ, tr),
               matrix_algebra(QQ, 2, tr),
               square_zero_with_d(QQ, tr)]
    for A in presets:
        ok &= double_dual_compare(A) == []
    TX = tensor_algebra(QQ, [("x", 1)], tr)
    D = sweedler_dual(TX)
    TC = tensor_coalgebra(QQ, [("xs", -1)], tr)
    ok &= D.space.dims() == TC.space.dims()
    ok &= D.verify() == []
    announce(10, ok, "(A*)* ≅ A for 3 graded-finite presets; "
                     "T(x)∨ = T^c(x*) dims to weight 6, exact")


# -- criterion 11: Tor reproduction -------------------------------------------------------------------


def tor_dual_numbers_oracle(L: int) -> dict:
    """Tor over F[ε]/ε² from the explicit free resolution … → A → A → F.

    Every stage is A with boundary multiplication-by-ε.  Exactness of the
    resolution is verified by rank computations, then F⊗_A(-) is applied
    (each stage becomes F·[1] with the induced boundary aug(ε·1)·[1]) and
    the homology of the induced complex is computed degreewise.
    """
    from sweedler.linalg import kernel_basis
    basis = ["one", "eps"]
    boundary = {"one": {"eps": QQ.one()}, "eps": {}}    # ·ε
    # exactness at interior stages: ker(·ε) = im(·ε)
    ker = kernel_basis(QQ, boundary, basis, basis)
    image = RowSpace(QQ, basis)
    for b in basis:
        image.add(boundary[b])
    assert len(ker) == image.rank == 1
    assert image.contains(ker[0])
    # induced complex: stage k = F·[1_k]; boundary coefficient = aug(ε·1)
    aug = {"one": QQ.one(), "eps": QQ.zero()}
    induced = QQ.zero()
    for t, c in boundary["one"].items():
        induced = QQ.add(induced, QQ.mul(c, aug[t]))
    r = 0 if QQ.is_zero(induced) else 1
    # homology of F ←r− F ←r− …: dim 1 minus outgoing minus incoming rank
    return {n: 1 - (r if n > 0 else 0) - r for n in range(L)}


def test_criterion_11_tor_reproduction():
    started = time.time()
    L = 6
    oracle = tor_dual_numbers_oracle(L)
    A = load_preset("dual-numbers").build(QQ, Truncation(-1, L, L))
    b = bar(A, Truncation(-1, L, L))
    h = homology(b.coalgebra.dg)
    got = {n: h[n].dim for n in range(L)}
    ok = got == oracle == {n: 1 for n in range(L)}
    elapsed = time.time() - started
    ok &= elapsed <= 5
    announce(11, ok, f"H(B(F[ε]/ε²)) = F in each degree 0..{L - 1}, matching "
                     f"the free-resolution Tor oracle ({elapsed:.2f}s ≤ 5s)")
