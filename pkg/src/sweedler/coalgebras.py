"""dg-coalgebras: tensor/coshuffle coalgebras, conilpotency, coextensions.

The comultiplication is a graded map C → C⊗C into the materialized tensor
space.  Pointed coalgebras carry an atom: a basis label e with Δ(e) = e⊗e,
ε(e) = 1, de = 0; the reduced part C_- = ker ε is materialized with its
reduced coproduct whenever conilpotency machinery needs it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Field
from .graded import (GradedSpace, GradedMap, Truncation, tensor_space,
                     tensor_label, strength_tensor, identity_map,
                     koszul_sign_exponent, label_str, graded_dual, dual_label)
from .complexes import DgSpace, check_square_zero
from .linalg import RowSpace, vaddmul, kernel_basis
from .algebras import (DgAlgebra, word_label, word_syms, UNIT_WORD,
                       free_word_space, extend_derivation)


class CoalgebraError(Exception):
    pass


class NotAnAtom(CoalgebraError):
    pass


class NotConilpotent(CoalgebraError):
    pass


class RegimeViolation(CoalgebraError):
    pass


class NotGradedFinite(CoalgebraError):
    pass


class DgCoalgebra:
    """Carrier + comultiplication + optional counit/atom + differential."""

    def __init__(self, dg: DgSpace, comult: GradedMap, counit: dict | None,
                 atom=None, name: str = ""):
        self.dg = dg
        self.comult = comult          # C → C⊗C
        self.counit = counit          # basis label -> scalar
        self.atom = atom              # a basis label, or None
        self.name = name

    @property
    def space(self) -> GradedSpace:
        return self.dg.space

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def d(self) -> GradedMap:
        return self.dg.d

    @property
    def TT(self) -> GradedSpace:
        return self.comult.target

    def counit_of(self, vec: dict):
        field = self.field
        if self.counit is None:
            raise CoalgebraError("coalgebra has no counit")
        total = field.zero()
        for k, c in vec.items():
            e = self.counit.get(k, field.zero())
            total = field.add(total, field.mul(c, e))
        return total

    # -- verification ----------------------------------------------------------
    def verify(self, check_d_squared: bool = True) -> list[str]:
        issues: list[str] = []
        field = self.field
        # coassociativity, compared in flattened triple coordinates
        for x in self.space.labels():
            left: dict = {}
            right: dict = {}
            for t, c in self.comult.apply_label(x).items():
                _, a, b = t
                for t2, c2 in self.comult.apply_label(a).items():
                    _, a1, a2 = t2
                    key = (a1, a2, b)
                    left = vaddmul(field, left, field.mul(c, c2),
                                   {key: field.one()})
                for t2, c2 in self.comult.apply_label(b).items():
                    _, b1, b2 = t2
                    key = (a, b1, b2)
                    right = vaddmul(field, right, field.mul(c, c2),
                                    {key: field.one()})
            # only compare components representable on both sides
            window = self.space.window
            left = {k: v for k, v in left.items()
                    if window.contains(self.space.degree_of(k[0])
                                       + self.space.degree_of(k[1]))}
            right = {k: v for k, v in right.items()
                     if window.contains(self.space.degree_of(k[1])
                                        + self.space.degree_of(k[2]))}
            if left != right:
                issues.append(f"coassociativity fails at {label_str(x)}")
                break
        # counit laws
        if self.counit is not None:
            for x in self.space.labels():
                lhs: dict = {}
                rhs: dict = {}
                for t, c in self.comult.apply_label(x).items():
                    _, a, b = t
                    ea = self.counit.get(a, field.zero())
                    eb = self.counit.get(b, field.zero())
                    lhs = vaddmul(field, lhs, field.mul(c, ea), {b: field.one()})
                    rhs = vaddmul(field, rhs, field.mul(c, eb), {a: field.one()})
                if lhs != {x: field.one()} or rhs != {x: field.one()}:
                    issues.append(f"counit law fails at {label_str(x)}")
                    break
        # co-Leibniz
        dT = strength_tensor(self.d, identity_map(self.space)).add(
            strength_tensor(identity_map(self.space), self.d))
        for x in self.space.labels():
            lhs = self.comult(self.d.apply_label(x))
            rhs = dT(self.comult.apply_label(x))
            if lhs != rhs:
                issues.append(f"co-Leibniz fails at {label_str(x)}")
                break
        # atom axioms
        if self.atom is not None:
            e = self.atom
            if self.comult.apply_label(e) != \
                    {tensor_label(e, e): field.one()}:
                issues.append("atom is not grouplike")
            if self.counit is not None and \
                    not field.is_one(self.counit.get(e, field.zero())):
                issues.append("counit of atom is not 1")
            if self.d.apply_label(e):
                issues.append("atom is not a cycle")
        if check_d_squared:
            report = check_square_zero(self.dg)
            if not report.passed:
                issues.append(report.describe(self.space))
        return issues

    def is_cocommutative(self):
        """None if cocommutative; else a witness basis label."""
        field = self.field
        for x in self.space.labels():
            delta = self.comult.apply_label(x)
            swapped: dict = {}
            for t, c in delta.items():
                _, a, b = t
                sign = field.sign(self.space.degree_of(a)
                                  * self.space.degree_of(b))
                swapped = vaddmul(field, swapped, field.mul(sign, c),
                                  {tensor_label(b, a): field.one()})
            if swapped != delta:
                return x
        return None


# -- reduced part of a pointed coalgebra ------------------------------------------


def red_label(x) -> tuple:
    return ("red", x)


class ReducedCoalgebra:
    """C_- = ker ε with the reduced coproduct, for a pointed coalgebra.

    Basis: for each non-atom label x, the vector x - ε(x)·e.
    """

    def __init__(self, C: DgCoalgebra):
        if C.atom is None or C.counit is None:
            raise NotAnAtom("reduced part needs a pointed counital coalgebra")
        self.C = C
        field = C.field
        e = C.atom
        space = GradedSpace(field, C.space.window)
        for x in C.space.labels():
            if x != e:
                space.add(red_label(x), C.space.degree_of(x),
                          weight=C.space.weight_of(x))
        for n in C.space.inexact_degrees():
            space.mark_inexact(n)
        self.space = space
        self.RR = tensor_space(space, space)

        def incl_vec(r: dict) -> dict:
            out: dict = {}
            for lab, c in r.items():
                x = lab[1]
                out = vaddmul(field, out, c, {x: field.one()})
                eps = C.counit.get(x, field.zero())
                out = vaddmul(field, out, field.neg(field.mul(c, eps)),
                              {e: field.one()})
            return out

        def proj_vec(v: dict) -> dict:
            out: dict = {}
            for x, c in v.items():
                if x != e:
                    out = vaddmul(field, out, c, {red_label(x): field.one()})
            return out

        self.include = incl_vec
        self.project = proj_vec
        # reduced coproduct: (π⊗π)Δ on included vectors
        comult = GradedMap(space, self.RR, 0)
        for lab in space.labels():
            img: dict = {}
            for t, c in C.comult(incl_vec({lab: field.one()})).items():
                _, a, b = t
                if a != e and b != e:
                    rl = tensor_label(red_label(a), red_label(b))
                    if rl in self.RR:
                        img = vaddmul(field, img, c, {rl: field.one()})
            comult.set(lab, img)
        self.comult = comult
        d = GradedMap(space, space, -1)
        for lab in space.labels():
            d.set(lab, space.project(
                proj_vec(C.d(incl_vec({lab: field.one()})))))
        self.d = d

    def iterate_comult(self, vec: dict, n: int) -> dict:
        """Δ_-^{(n)} as a dict over flat tuples of reduced labels."""
        field = self.C.field
        terms: dict = {(lab,): c for lab, c in vec.items()}
        for _ in range(n - 1):
            new: dict = {}
            for key, c in terms.items():
                # expand the first slot (Δ^{(n+1)} = (Δ^{(n)}⊗id)Δ applied
                # left-to-right gives the same set; expand last slot instead)
                last = key[-1]
                for t, c2 in self.comult.apply_label(last).items():
                    _, a, b = t
                    new_key = key[:-1] + (a, b)
                    new = vaddmul(field, new, field.mul(c, c2),
                                  {new_key: field.one()})
            terms = new
        return terms


# -- radical and primitives --------------------------------------------------------


@dataclass
class RadicalResult:
    vectors: list            # basis of R^c(C_-) in reduced coordinates
    dims: dict
    proven: bool             # filtration stabilized inside the window
    steps: int

    @property
    def flag(self) -> str:
        return "proven" if self.proven else "window-conilpotent"


def radical(C: DgCoalgebra) -> RadicalResult:
    """Largest conilpotent subcoalgebra of C_-, by the kernel filtration.

    F_1 = ker Δ_-, F_{k+1} = Δ_-^{-1}(F_k ⊗ C_-); the chain stabilizes inside
    the window, which proves maximality there.  The result is only
    window-certified when C itself carries truncation-affected degrees.
    """
    R = ReducedCoalgebra(C)
    field = C.field
    space, RR = R.space, R.RR

    def filtration_step(current: list | None) -> list:
        # basis of {x : Δ_-(x) ∈ span(current) ⊗ C_-}; None means F_1
        quotient_rows: dict[int, RowSpace] = {}
        if current is not None:
            # mark the complement: reduce Δ_-(x) modulo span{f ⊗ c}
            span = []
            for f in current:
                for c in space.labels():
                    vec: dict = {}
                    for lf, cf in f.items():
                        lab = tensor_label(lf, c)
                        if lab in RR:
                            vec = vaddmul(field, vec, cf, {lab: field.one()})
                    if vec:
                        span.append(vec)
            for n in RR.degrees():
                quotient_rows[n] = RowSpace(field, RR.basis(n))
            for v in span:
                n = RR.degree_of_vector(v)
                if n is not None:
                    quotient_rows[n].add(v)

        def residue(x_label):
            img = R.comult.apply_label(x_label)
            if current is None or not img:
                return img
            n = RR.degree_of_vector(img)
            return quotient_rows[n].reduce(img) if n is not None else {}

        out = []
        for n in space.degrees():
            cols = {lab: residue(lab) for lab in space.basis(n)}
            target_order = RR.basis(n)
            out.extend(kernel_basis(field, cols, space.basis(n), target_order))
        return out

    prev: list | None = None
    current = filtration_step(None)
    steps = 1
    bound = space.total_dim() + 1
    while True:
        nxt = filtration_step(current)
        steps += 1
        if len(nxt) == len(current):
            break
        current = nxt
        if steps > bound:
            break
    proven = not C.space.inexact_degrees()
    dims: dict[int, int] = {}
    for v in current:
        n = space.degree_of_vector(v)
        dims[n] = dims.get(n, 0) + 1
    return RadicalResult(current, dict(sorted(dims.items())), proven, steps)


def primitives(C: DgCoalgebra) -> list:
    """Basis of ker(Δ_-) ⊆ C_-, in reduced coordinates."""
    R = ReducedCoalgebra(C)
    field = C.field
    out = []
    for n in R.space.degrees():
        cols = {lab: R.comult.apply_label(lab) for lab in R.space.basis(n)}
        out.extend(kernel_basis(field, cols, R.space.basis(n), R.RR.basis(n)))
    return out


# -- tensor and coshuffle coalgebras --------------------------------------------------


def _deconcat_map(space: GradedSpace) -> GradedMap:
    field = space.field
    TT = tensor_space(space, space)
    comult = GradedMap(space, TT, 0)
    for lab in space.labels():
        syms = word_syms(lab)
        img: dict = {}
        for i in range(len(syms) + 1):
            t = tensor_label(word_label(syms[:i]), word_label(syms[i:]))
            if t in TT:
                img[t] = field.one()
            else:
                space.mark_inexact(space.degree_of(lab))
        comult.set(lab, img)
    return comult


def tensor_coalgebra(field: Field, generators: list[tuple], trunc: Truncation,
                     d_gen: dict | None = None, name: str = "") -> DgCoalgebra:
    """T^c(X): deconcatenation coproduct, counit = length-0 projection."""
    space = free_word_space(field, generators, trunc)
    comult = _deconcat_map(space)
    counit = {UNIT_WORD: field.one()}
    D = extend_derivation(generators, d_gen or {}, space, -1)
    return DgCoalgebra(DgSpace(space, D), comult, counit, atom=UNIT_WORD,
                       name=name or "Tc(X)")


def odd_binomial(n: int, k: int) -> int:
    """⟨n choose k⟩: Pascal's rule, zero when n is even and k is odd."""
    if k < 0 or k > n or n < 0:
        raise CoalgebraError(f"odd binomial out of range: ({n},{k})")
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [1]
        for j in range(1, m):
            row.append(prev[j] + prev[j - 1])
        row.append(1)
        if m % 2 == 0:
            row = [0 if j % 2 else v for j, v in enumerate(row)]
    return row[k]


def coshuffle_comult(space: GradedSpace, degree_of: dict) -> GradedMap:
    """Signed unshuffle coproduct on a word space."""
    field = space.field
    TT = tensor_space(space, space)
    comult = GradedMap(space, TT, 0)
    for lab in space.labels():
        syms = word_syms(lab)
        k = len(syms)
        degrees = [degree_of[s] for s in syms]
        img: dict = {}
        for size in range(k + 1):
            for subset in itertools.combinations(range(k), size):
                rest = [i for i in range(k) if i not in subset]
                perm = list(subset) + rest
                exp = koszul_sign_exponent(degrees, perm)
                left = word_label(tuple(syms[i] for i in subset))
                right = word_label(tuple(syms[i] for i in rest))
                t = tensor_label(left, right)
                if t in TT:
                    img = vaddmul(field, img, field.sign(exp),
                                  {t: field.one()})
                else:
                    space.mark_inexact(space.degree_of(lab))
        comult.set(lab, img)
    return comult


def coshuffle_coalgebra(field: Field, generators: list[tuple],
                        trunc: Truncation, d_gen: dict | None = None,
                        name: str = "") -> DgCoalgebra:
    """T^csh(X): the unshuffle coproduct; odd binomials on one odd generator."""
    space = free_word_space(field, generators, trunc)
    comult = coshuffle_comult(space, dict(generators))
    counit = {UNIT_WORD: field.one()}
    D = extend_derivation(generators, d_gen or {}, space, -1)
    return DgCoalgebra(DgSpace(space, D), comult, counit, atom=UNIT_WORD,
                       name=name or "Tcsh(X)")


# -- coderivations ---------------------------------------------------------------


def coextend_coderivation(space: GradedSpace, generators: list[tuple],
                          phi: dict, degree: int,
                          pointed: bool = True) -> GradedMap:
    """Unique coderivation of T^c(X) with corestriction phi.

    phi maps word labels to vectors over generator symbols.  The coextension
    is D(x1⊗…⊗xk) = Σ_{i≤j} (-1)^{degree·(|x1|+…+|xi|)}
    x1…xi ⊗ φ(x_{i+1}…x_j) ⊗ x_{j+1}…xk; with `pointed`, φ is only consulted
    on words of length ≥ 1 (i < j).
    """
    degree_of = dict(generators)
    field = space.field
    D = GradedMap(space, space, degree)
    cap = space.window.weight_cap
    for lab in space.labels():
        syms = word_syms(lab)
        k = len(syms)
        img: dict = {}
        prefix = 0
        for i in range(k + 1):
            start = i if not pointed else i + 1
            sign = field.sign(degree * prefix)
            for j in range(start, k + 1):
                if j < i:
                    continue
                chunk = word_label(syms[i:j])
                val = phi.get(chunk)
                if val:
                    for sym, coeff in val.items():
                        new = word_label(syms[:i] + (sym,) + syms[j:])
                        if len(word_syms(new)) <= cap:
                            img = vaddmul(field, img,
                                          field.mul(sign, coeff),
                                          {new: field.one()})
            if i < k:
                prefix += degree_of[syms[i]]
        D.set(lab, space.project(img))
    return D


# -- cofree conilpotent coalgebra ----------------------------------------------------


def check_cofree_regime(generators: list[tuple]) -> None:
    degs = [d for _, d in generators]
    if not degs:
        return
    if all(d > 0 for d in degs) or all(d < 0 for d in degs):
        return
    raise RegimeViolation(
        "cofree coalgebra formula needs strictly positive or strictly "
        f"negative cogenerators, got degrees {sorted(set(degs))}")


def cofree_coalgebra(field: Field, generators: list[tuple], trunc: Truncation,
                     d_gen: dict | None = None, name: str = "") -> DgCoalgebra:
    """T^∨(X) in the regime where it equals T^c(X)."""
    check_cofree_regime(generators)
    return tensor_coalgebra(field, generators, trunc, d_gen,
                            name=name or "Tv(X)")


def coextend_map(C: DgCoalgebra, f: dict, target: DgCoalgebra,
                 max_terms: int | None = None) -> GradedMap:
    """Unique coalgebra map g: C → T^c(X) with p∘g = f, for conilpotent C.

    f maps reduced labels of C to vectors over the generator symbols of the
    word coalgebra `target`; g(x) = Σ_{n≥1} f^{⊗n} Δ_-^{(n)}(x) on C_-, and
    g(atom) = empty word.
    """
    R = ReducedCoalgebra(C)
    field = C.field
    T = target.space
    cap = T.window.weight_cap
    bound = max_terms if max_terms is not None else max(cap, R.space.total_dim() + 1)
    g = GradedMap(C.space, T, 0)
    one = field.one()
    for x in C.space.labels():
        if x == C.atom:
            g.set(x, {UNIT_WORD: one})
            continue
        vec = R.project(C.space.project({x: one})
                        if x != C.atom else {})
        # include counit correction: x = ε(x)e + (reduced part)
        img: dict = {}
        eps = C.counit.get(x, field.zero())
        if not field.is_zero(eps):
            img[UNIT_WORD] = eps
        terms = {(lab,): c for lab, c in vec.items()}
        n = 1
        while terms and n <= bound:
            for key, c in terms.items():
                # apply f slotwise and concatenate
                pieces = [f.get(lab, {}) for lab in key]
                for combo in itertools.product(*(p.items() for p in pieces)):
                    syms = tuple(s for s, _ in combo)
                    coeff = c
                    for _, cc in combo:
                        coeff = field.mul(coeff, cc)
                    w = word_label(syms)
                    if len(syms) <= cap and w in T:
                        img = vaddmul(field, img, coeff, {w: one})
            new: dict = {}
            for key, c in terms.items():
                last = key[-1]
                for t, c2 in R.comult.apply_label(last).items():
                    _, a, b = t
                    new = vaddmul(field, new, field.mul(c, c2),
                                  {key[:-1] + (a, b): one})
            terms = new
            n += 1
        if terms and max_terms is None and n > bound:
            raise NotConilpotent(
                f"Δ_- fails to vanish on {label_str(x)} after {bound} steps")
        g.set(x, img)
    return g


# -- (quasi-)shuffle products ---------------------------------------------------------


def tensor_product_coalgebra(C: DgCoalgebra, D: DgCoalgebra,
                             name: str = "") -> DgCoalgebra:
    """C⊗D with Δ(c⊗d) = (-1)^{|c2||d1|} (c1⊗d1)⊗(c2⊗d2)."""
    from .complexes import dg_tensor
    dg = dg_tensor(C.dg, D.dg)
    T = dg.space
    field = T.field
    TT = tensor_space(T, T)
    comult = GradedMap(T, TT, 0)
    for lab in T.labels():
        _, c, d = lab
        img: dict = {}
        for t1, c1 in C.comult.apply_label(c).items():
            _, ca, cb = t1
            for t2, c2 in D.comult.apply_label(d).items():
                _, da, db = t2
                sign = field.sign(C.space.degree_of(cb)
                                  * D.space.degree_of(da))
                left = tensor_label(ca, da)
                right = tensor_label(cb, db)
                if left in T and right in T:
                    t = tensor_label(left, right)
                    if t in TT:
                        img = vaddmul(field, img,
                                      field.mul(sign, field.mul(c1, c2)),
                                      {t: field.one()})
        comult.set(lab, img)
    counit = None
    if C.counit is not None and D.counit is not None:
        counit = {}
        for lab in T.labels():
            _, c, d = lab
            v = field.mul(C.counit.get(c, field.zero()),
                          D.counit.get(d, field.zero()))
            if not field.is_zero(v):
                counit[lab] = v
    atom = None
    if C.atom is not None and D.atom is not None:
        atom = tensor_label(C.atom, D.atom)
    return DgCoalgebra(dg, comult, counit, atom,
                       name=name or f"{C.name}⊗{D.name}")


def quasi_shuffle_product(T: DgCoalgebra, mult: dict | None) -> GradedMap:
    """The unique coalgebra map μ: T^c(A)⊗T^c(A) → T^c(A) with
    pμ(x,y) = p(x)p(y) + ε(x)p(y) + p(x)ε(y).

    `mult` gives the non-unital product of A on generator symbols
    ((a, b) -> vector over symbols); None or missing entries mean zero, which
    yields the shuffle product.
    """
    field = T.field
    CC = tensor_product_coalgebra(T, T)
    mult = mult or {}

    # f: (T⊗T)_- → generators of T, in reduced coordinates of CC
    f: dict = {}
    for lab in CC.space.labels():
        _, x, y = lab
        sx, sy = word_syms(x), word_syms(y)
        val: dict = {}
        if len(sx) == 1 and len(sy) == 1:
            val = dict(mult.get((sx[0], sy[0]), {}))
        elif len(sx) == 1 and len(sy) == 0:
            val = {sx[0]: field.one()}
        elif len(sx) == 0 and len(sy) == 1:
            val = {sy[0]: field.one()}
        if val:
            f[red_label(lab)] = val

    g = coextend_map(CC, _reduced_f(CC, f), T)
    # flatten to a map on the tensor square space
    return g


def _reduced_f(CC: DgCoalgebra, f: dict) -> dict:
    """Adjust a generator-valued function to reduced coordinates of CC."""
    # reduced label ("red", x) stands for x - ε(x)·atom; ε vanishes on the
    # labels where f is supported (they involve a word of length ≥ 1), so f
    # needs no correction term.
    return f


def shuffle_product(T: DgCoalgebra) -> GradedMap:
    return quasi_shuffle_product(T, None)


# -- finite duals ----------------------------------------------------------------


def finite_dual(A: DgAlgebra, name: str = "") -> DgCoalgebra:
    """A* as a dg-coalgebra, for graded-finite A bounded in the window.

    Δ(a*) = Σ_{b,c} (coefficient of a in bc) (-1)^{|b||c|} b*⊗c*.
    """
    space = A.space
    if space.inexact_degrees():
        raise NotGradedFinite(
            "dual of a truncation-affected algebra would not be the "
            "truncation of the dual")
    field = A.field
    D = graded_dual(space)
    DD = tensor_space(D, D)
    comult = GradedMap(D, DD, 0)
    cols: dict = {lab: {} for lab in D.labels()}
    for b in space.labels():
        for c in space.labels():
            prod = A._pair(b, c)
            if not prod:
                continue
            exp = space.degree_of(b) * space.degree_of(c)
            sign = field.sign(exp)
            for a, coeff in prod.items():
                t = tensor_label(dual_label(b), dual_label(c))
                if t in DD:
                    cols[dual_label(a)] = vaddmul(
                        field, cols[dual_label(a)],
                        field.mul(sign, coeff), {t: field.one()})
    for lab, img in cols.items():
        comult.set(lab, img)
    counit = {}
    if A.unit is not None:
        for a, coeff in A.unit.items():
            counit[dual_label(a)] = coeff
    dD = GradedMap(D, D, -1)
    for b in space.labels():
        for a, coeff in A.d.apply_label(b).items():
            # d(a*) picks up -(-1)^{|a*|} from d(φ) = -(-1)^{|φ|} φ∘d
            sign = field.sign(1 + space.degree_of(a))
            prev = dD.apply_label(dual_label(a))
            prev = vaddmul(field, prev, field.mul(sign, coeff),
                           {dual_label(b): field.one()})
            dD.set(dual_label(a), D.project(prev))
    atom = None
    if A.aug is not None:
        # the augmentation, as a functional, is grouplike in A*
        labels = [lab for lab, v in A.aug.items() if not field.is_zero(v)]
        if len(labels) == 1 and field.is_one(A.aug[labels[0]]):
            atom = dual_label(labels[0])
    return DgCoalgebra(DgSpace(D, dD), comult, counit, atom,
                       name=name or f"{A.name}*")


def dual_algebra(C: DgCoalgebra, name: str = "") -> DgAlgebra:
    """C* as a dg-algebra (convolution with scalars): b*·c* = ±(Δ-transpose)."""
    space = C.space
    if space.inexact_degrees():
        raise NotGradedFinite("dual of a truncation-affected coalgebra")
    field = C.field
    D = graded_dual(space)

    def pair(bd, cd):
        b, c = bd[1], cd[1]
        sign = field.sign(space.degree_of(b) * space.degree_of(c))
        out: dict = {}
        for x in space.labels():
            coeff = C.comult.apply_label(x).get(tensor_label(b, c))
            if coeff is not None:
                out = vaddmul(field, out, field.mul(sign, coeff),
                              {dual_label(x): field.one()})
        return D.project(out)

    unit = None
    if C.counit is not None:
        unit = {dual_label(x): v for x, v in C.counit.items()}
    dD = GradedMap(D, D, -1)
    for b in space.labels():
        for a, coeff in C.d.apply_label(b).items():
            sign = field.sign(1 + space.degree_of(a))
            prev = dD.apply_label(dual_label(a))
            prev = vaddmul(field, prev, field.mul(sign, coeff),
                           {dual_label(b): field.one()})
            dD.set(dual_label(a), D.project(prev))
    aug = None
    if C.atom is not None:
        aug = {dual_label(C.atom): field.one()}
    alg = DgAlgebra(DgSpace(D, dD), pair, unit, aug,
                    name=name or f"{C.name}*")
    return alg
