"""dg-vector spaces: differentials, dg tensor/hom, d²=0 checks, homology.

Homology is computed degreewise by exact Gaussian elimination.  Each report
carries a trust flag per degree: a degree is trusted only when both the
incoming and outgoing ranks are fully representable inside the truncation
window (a differential that raises word length makes top-weight degrees
unreliable, and the lowest window degree cannot see its own boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .graded import (GradedSpace, GradedMap, Truncation, hom_space,
                     hom_label, strength_tensor, identity_map, label_str)
from .linalg import rank_of_columns, kernel_basis, vaddmul


class NotAComplex(Exception):
    pass


class DgSpace:
    """A graded space with a degree -1 differential.

    `d_raises` bounds how much the differential can raise word length (0 for
    internal differentials, 1 for cobar-type external ones); it feeds the
    window-exactness bookkeeping.
    """

    def __init__(self, space: GradedSpace, d: GradedMap | None = None,
                 d_raises: int = 0):
        self.space = space
        if d is None:
            d = GradedMap(space, space, -1)
        if d.degree != -1:
            raise NotAComplex("differential must have degree -1")
        self.d = d
        self.d_raises = d_raises

    @property
    def field(self):
        return self.space.field

    @property
    def window(self) -> Truncation:
        return self.space.window

    def d_reliable(self, degree: int) -> bool:
        """Is the restriction of d to this degree fully in-window?"""
        if self.space.dim(degree) == 0:
            return True
        if degree - 1 < self.window.degree_min:
            return False
        if self.d_raises:
            cap = self.window.weight_cap
            for label in self.space.basis(degree):
                w = self.space.weight_of(label)
                if w is not None and w + self.d_raises > cap:
                    return False
        return True

    def d2_checkable(self, label) -> bool:
        degree = self.space.degree_of(label)
        if degree - 2 < self.window.degree_min:
            return False
        if self.d_raises:
            w = self.space.weight_of(label)
            if w is not None and w + 2 * self.d_raises > self.window.weight_cap:
                return False
        return True


@dataclass
class SquareZeroReport:
    witnesses: list = dc_field(default_factory=list)
    checked: int = 0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def describe(self, space: GradedSpace | None = None) -> str:
        if self.passed:
            return f"d²=0 on {self.checked} checkable basis elements"
        label, residue = self.witnesses[0]
        res = space.render(residue) if space else repr(residue)
        return (f"d²≠0 at {label_str(label)}: d²({label_str(label)}) = {res}"
                f" ({len(self.witnesses)} witnesses)")


def check_square_zero(X: DgSpace) -> SquareZeroReport:
    """List all checkable basis elements where d² fails to vanish."""
    report = SquareZeroReport()
    for label in X.space.labels():
        if not X.d2_checkable(label):
            report.skipped += 1
            continue
        report.checked += 1
        residue = X.d(X.d.apply_label(label))
        if residue:
            report.witnesses.append((label, residue))
    return report


@dataclass
class HomologyEntry:
    dim: int
    trusted: bool


def homology(X: DgSpace, check: bool = True) -> dict[int, HomologyEntry]:
    """dim H_n = dim X_n - rank d_n - rank d_{n+1}, with trust flags."""
    if check:
        report = check_square_zero(X)
        if not report.passed:
            raise NotAComplex(report.describe(X.space))
    space, d = X.space, X.d
    ranks: dict[int, int] = {}
    for n in space.degrees():
        cols = {lab: d.apply_label(lab) for lab in space.basis(n)}
        ranks[n] = rank_of_columns(space.field, cols, space.basis(n),
                                   space.basis(n - 1))
    out: dict[int, HomologyEntry] = {}
    for n in space.degrees():
        dim = space.dim(n) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        trusted = (space.is_exact(n) and space.is_exact(n + 1)
                   and X.d_reliable(n) and X.d_reliable(n + 1))
        out[n] = HomologyEntry(dim, trusted)
    return out


def cycles(X: DgSpace, degree: int) -> list[dict]:
    """Basis of ker(d) in one degree."""
    space = X.space
    cols = {lab: X.d.apply_label(lab) for lab in space.basis(degree)}
    return kernel_basis(space.field, cols, space.basis(degree),
                        space.basis(degree - 1))


def dg_tensor(X: DgSpace, Y: DgSpace) -> DgSpace:
    """d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy, via the monoidal strength."""
    dX = strength_tensor(X.d, identity_map(Y.space))
    dY = strength_tensor(identity_map(X.space), Y.d)
    return DgSpace(dX.source, dX.add(dY),
                   d_raises=max(X.d_raises, Y.d_raises))


def dg_hom(X: DgSpace, Y: DgSpace) -> DgSpace:
    """d(f) = d_Y f - (-1)^{|f|} f d_X on the hom space."""
    H = hom_space(X.space, Y.space)
    field = H.field
    d = GradedMap(H, H, -1)
    for label in H.labels():
        _, x, y = label
        img: dict = {}
        for y2, coeff in Y.d.apply_label(y).items():
            img[hom_label(x, y2)] = coeff
        sign = field.sign(H.degree_of(label) + 1)  # -(-1)^{|f|}
        for z in X.space.labels():
            c = X.d.apply_label(z).get(x)
            if c is not None:
                img = vaddmul(field, img, field.mul(sign, c),
                              {hom_label(z, y): field.one()})
        d.set(label, H.project(img))
    return DgSpace(H, d)


def shift_complex(X: DgSpace, n: int) -> DgSpace:
    """Dimension-level shift: same basis relabelled by degree + n."""
    from .graded import suspend, susp_label
    S = suspend(X.space, n)
    d = GradedMap(S, S, -1)
    field = S.field
    sign = field.sign(n)
    for label in S.labels():
        x = label[2]
        img = {susp_label(n, y): field.mul(sign, c)
               for y, c in X.d.apply_label(x).items()
               if susp_label(n, y) in S}
        d.set(label, img)
    return DgSpace(S, d, d_raises=X.d_raises)
