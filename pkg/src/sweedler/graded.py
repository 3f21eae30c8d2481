"""Graded vector spaces with named bases, graded maps, and the Koszul rule.

Basis elements are hashable labels: plain strings for user-declared
generators, structured tuples for constructed elements:

    ("w", (x1, ..., xn))   tensor word (empty tuple = unit word)
    ("t", x, y)            binary tensor factor
    ("h", x, y)            elementary hom basis vector, sends x to y
    ("d", x)               dual basis vector x*
    ("s", n, x)            n-fold suspension s^n x

All constructions are truncated to a window: a degree interval plus a word
length cap.  Operations drop components that fall outside the window (or
raise WindowOverflow in strict mode) and record which degrees that touched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Field, require_same_field
from .linalg import vaddmul


class GradedError(Exception):
    pass


class WindowOverflow(GradedError):
    pass


@dataclass(frozen=True)
class Truncation:
    """Degree window and word-length cap for all infinite constructions."""
    degree_min: int
    degree_max: int
    weight_cap: int

    def __post_init__(self):
        if self.degree_min > self.degree_max:
            raise GradedError("degree_min > degree_max")
        if self.weight_cap < 1:
            raise GradedError("weight_cap < 1")

    def contains(self, degree: int) -> bool:
        return self.degree_min <= degree <= self.degree_max

    def __str__(self):
        return f"{self.degree_min}:{self.degree_max}:{self.weight_cap}"

    @staticmethod
    def parse(text: str) -> "Truncation":
        parts = text.split(":")
        if len(parts) != 3:
            raise GradedError(f"bad truncation {text!r}, want dmin:dmax:L")
        return Truncation(int(parts[0]), int(parts[1]), int(parts[2]))


def label_str(label) -> str:
    """Readable rendering of a basis label."""
    if isinstance(label, str):
        return label
    kind = label[0]
    if kind == "w":
        return "1" if not label[1] else "⊗".join(label_str(x) for x in label[1])
    if kind == "t":
        return f"({label_str(label[1])})⊗({label_str(label[2])})"
    if kind == "h":
        return f"[{label_str(label[1])}↦{label_str(label[2])}]"
    if kind == "d":
        return f"{label_str(label[1])}*"
    if kind == "s":
        n = label[1]
        power = "s" if n == 1 else f"s^{n}"
        return f"{power}[{label_str(label[2])}]"
    if kind == "rh":
        return f"{label_str(label[1])}▷{label_str(label[2])}"
    return repr(label)


class GradedSpace:
    """Finite named basis per integer degree, inside a truncation window."""

    def __init__(self, field: Field, window: Truncation):
        self.field = field
        self.window = window
        self._by_degree: dict[int, list] = {}
        self._degree_of: dict = {}
        self._weight_of: dict = {}
        self._inexact: set[int] = set()

    # -- construction --------------------------------------------------------
    def add(self, label, degree: int, weight: int | None = None,
            strict: bool = False) -> bool:
        """Insert a basis element; returns False if outside the window."""
        if label in self._degree_of:
            raise GradedError(f"duplicate basis label {label_str(label)}")
        if not self.window.contains(degree):
            if strict:
                raise WindowOverflow(
                    f"{label_str(label)} of degree {degree} outside window")
            return False
        self._by_degree.setdefault(degree, []).append(label)
        self._degree_of[label] = degree
        if weight is not None:
            self._weight_of[label] = weight
        return True

    def mark_inexact(self, degree: int) -> None:
        self._inexact.add(degree)

    def is_exact(self, degree: int) -> bool:
        return degree not in self._inexact

    def inexact_degrees(self) -> set[int]:
        return set(self._inexact)

    # -- queries ---------------------------------------------------------------
    def degrees(self) -> list[int]:
        return sorted(self._by_degree)

    def basis(self, degree: int) -> list:
        return list(self._by_degree.get(degree, []))

    def labels(self) -> list:
        out = []
        for n in self.degrees():
            out.extend(self._by_degree[n])
        return out

    def __contains__(self, label) -> bool:
        return label in self._degree_of

    def degree_of(self, label) -> int:
        try:
            return self._degree_of[label]
        except KeyError:
            raise GradedError(f"unknown basis label {label_str(label)}") from None

    def weight_of(self, label, default=None):
        return self._weight_of.get(label, default)

    def dim(self, degree: int) -> int:
        return len(self._by_degree.get(degree, []))

    def dims(self) -> dict[int, int]:
        return {n: len(b) for n, b in sorted(self._by_degree.items())}

    def total_dim(self) -> int:
        return len(self._degree_of)

    # -- vectors ---------------------------------------------------------------
    def project(self, formal: dict, strict: bool = False) -> dict:
        """Drop components outside this space (raise in strict mode)."""
        out = {}
        for label, coeff in formal.items():
            if label in self._degree_of:
                out[label] = coeff
            elif strict:
                raise WindowOverflow(
                    f"component {label_str(label)} falls outside the window")
        return out

    def degree_of_vector(self, vec: dict) -> int | None:
        """Common degree of a homogeneous vector (None for zero)."""
        degs = {self.degree_of(k) for k in vec}
        if not degs:
            return None
        if len(degs) > 1:
            raise GradedError(f"vector not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def render(self, vec: dict) -> str:
        if not vec:
            return "0"
        parts = []
        order = {k: i for i, k in enumerate(self.labels())}
        for k in sorted(vec, key=order.__getitem__):
            parts.append(f"{self.field.format(vec[k])}·{label_str(k)}")
        return " + ".join(parts)


def unit_space(field: Field, window: Truncation) -> GradedSpace:
    """The field as a graded space concentrated in degree 0."""
    F = GradedSpace(field, window)
    F.add(("unit",), 0, weight=0)
    return F


UNIT = ("unit",)


class GradedMap:
    """Homogeneous linear map stored as sparse images of basis elements."""

    def __init__(self, source: GradedSpace, target: GradedSpace, degree: int,
                 columns: dict | None = None):
        require_same_field(source.field, target.field)
        self.source = source
        self.target = target
        self.degree = degree
        self.columns: dict = {}
        if columns:
            for label, vec in columns.items():
                self.set(label, vec)

    @property
    def field(self) -> Field:
        return self.source.field

    def set(self, label, vec: dict) -> None:
        if label not in self.source:
            raise GradedError(f"source lacks {label_str(label)}")
        want = self.source.degree_of(label) + self.degree
        vec = {k: c for k, c in vec.items() if not self.field.is_zero(c)}
        for k in vec:
            got = self.target.degree_of(k)
            if got != want:
                raise GradedError(
                    f"image of {label_str(label)} not homogeneous: "
                    f"{label_str(k)} has degree {got}, want {want}")
        if vec:
            self.columns[label] = vec
        else:
            self.columns.pop(label, None)

    def __call__(self, vec: dict) -> dict:
        out: dict = {}
        for label, coeff in vec.items():
            out = vaddmul(self.field, out, coeff, self.columns.get(label, {}))
        return out

    def apply_label(self, label) -> dict:
        return dict(self.columns.get(label, {}))

    # -- algebra of maps ---------------------------------------------------------
    def compose(self, other: "GradedMap") -> "GradedMap":
        """self ∘ other."""
        if other.target is not self.source:
            require_same_field(other.target.field, self.source.field)
        out = GradedMap(other.source, self.target, self.degree + other.degree)
        for label, vec in other.columns.items():
            out.set(label, self(vec))
        return out

    def add(self, other: "GradedMap") -> "GradedMap":
        if self.degree != other.degree:
            raise GradedError("cannot add maps of different degrees")
        out = GradedMap(self.source, self.target, self.degree)
        for label in set(self.columns) | set(other.columns):
            out.set(label, vaddmul(self.field, self.apply_label(label),
                                   self.field.one(), other.apply_label(label)))
        return out

    def scale(self, coeff) -> "GradedMap":
        out = GradedMap(self.source, self.target, self.degree)
        for label, vec in self.columns.items():
            out.set(label, {k: self.field.mul(coeff, c) for k, c in vec.items()})
        return out

    def neg(self) -> "GradedMap":
        return self.scale(self.field.of(-1))

    def is_zero(self) -> bool:
        return not self.columns

    def equals(self, other: "GradedMap") -> bool:
        if self.degree != other.degree:
            return False
        labels = set(self.columns) | set(other.columns)
        return all(self.apply_label(k) == other.apply_label(k) for k in labels)


def identity_map(X: GradedSpace) -> GradedMap:
    f = GradedMap(X, X, 0)
    for label in X.labels():
        f.set(label, {label: X.field.one()})
    return f


def zero_map(X: GradedSpace, Y: GradedSpace, degree: int) -> GradedMap:
    return GradedMap(X, Y, degree)


# -- Koszul sign machinery -----------------------------------------------------

def koszul_sign_exponent(degrees: list[int], perm: list[int]) -> int:
    """Sign exponent for reordering graded symbols.

    `perm[i]` is the original position of the symbol landing in slot i; each
    inversion of an odd pair contributes one to the exponent.
    """
    exp = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                exp += degrees[perm[i]] * degrees[perm[j]]
    return exp


# -- constructions --------------------------------------------------------------

def tensor_label(x, y) -> tuple:
    return ("t", x, y)


def tensor_space(X: GradedSpace, Y: GradedSpace) -> GradedSpace:
    """(X⊗Y)_n = ⊕_{i+j=n} X_i⊗Y_j, inside the shared window."""
    require_same_field(X.field, Y.field)
    T = GradedSpace(X.field, X.window)
    for n in X.degrees():
        for x in X.basis(n):
            for m in Y.degrees():
                if not X.window.contains(n + m):
                    continue
                for y in Y.basis(m):
                    wx, wy = X.weight_of(x), Y.weight_of(y)
                    w = wx + wy if wx is not None and wy is not None else None
                    T.add(tensor_label(x, y), n + m, weight=w)
    # a degree fed by an inexact input degree is itself inexact
    for i in X.inexact_degrees():
        for j in Y.degrees():
            if T.window.contains(i + j):
                T.mark_inexact(i + j)
    for j in Y.inexact_degrees():
        for i in X.degrees():
            if T.window.contains(i + j):
                T.mark_inexact(i + j)
    return T


def koszul_swap(X: GradedSpace, Y: GradedSpace) -> GradedMap:
    """σ(x⊗y) = (-1)^{|x||y|} y⊗x."""
    XY = tensor_space(X, Y)
    YX = tensor_space(Y, X)
    f = GradedMap(XY, YX, 0)
    for label in XY.labels():
        _, x, y = label
        sign = X.field.sign(X.degree_of(x) * Y.degree_of(y))
        f.set(label, {tensor_label(y, x): sign})
    return f


def hom_label(x, y) -> tuple:
    return ("h", x, y)


def hom_space(X: GradedSpace, Y: GradedSpace) -> GradedSpace:
    """[X,Y]_n has basis the pairs x↦y with |y|-|x| = n, in the window."""
    require_same_field(X.field, Y.field)
    H = GradedSpace(X.field, X.window)
    for i in X.degrees():
        for j in Y.degrees():
            if not X.window.contains(j - i):
                continue
            for x in X.basis(i):
                for y in Y.basis(j):
                    H.add(hom_label(x, y), j - i)
    return H


def hom_vector_to_map(H: GradedSpace, X: GradedSpace, Y: GradedSpace,
                      vec: dict, degree: int) -> GradedMap:
    """Interpret a homogeneous vector of hom_space(X, Y) as a GradedMap."""
    f = GradedMap(X, Y, degree)
    cols: dict = {}
    for label, coeff in vec.items():
        _, x, y = label
        cols.setdefault(x, {})[y] = coeff
    for x, img in cols.items():
        f.set(x, img)
    return f


def map_to_hom_vector(f: GradedMap) -> dict:
    out = {}
    for x, img in f.columns.items():
        for y, coeff in img.items():
            out[hom_label(x, y)] = coeff
    return out


def lambda2(f: GradedMap, X: GradedSpace, Y: GradedSpace) -> GradedMap:
    """λ²(f): X → [Y,Z] with λ²(f)(x)(y) = f(x⊗y) (no sign)."""
    Z = f.target
    H = hom_space(Y, Z)
    g = GradedMap(X, H, f.degree)
    for x in X.labels():
        img: dict = {}
        for y in Y.labels():
            for z, coeff in f.apply_label(tensor_label(x, y)).items():
                img[hom_label(y, z)] = coeff
        g.set(x, H.project(img))
    return g


def lambda1(f: GradedMap, X: GradedSpace, Y: GradedSpace) -> GradedMap:
    """λ¹(f): Y → [X,Z] with λ¹(f)(y)(x) = (-1)^{|x||y|} f(x⊗y)."""
    Z = f.target
    H = hom_space(X, Z)
    field = f.field
    g = GradedMap(Y, H, f.degree)
    for y in Y.labels():
        img: dict = {}
        sign_base = Y.degree_of(y)
        for x in X.labels():
            sign = field.sign(X.degree_of(x) * sign_base)
            for z, coeff in f.apply_label(tensor_label(x, y)).items():
                img[hom_label(x, z)] = field.mul(sign, coeff)
        g.set(y, H.project(img))
    return g


def uncurry2(g: GradedMap, X: GradedSpace, Y: GradedSpace,
             Z: GradedSpace) -> GradedMap:
    """Inverse of λ²: f(x⊗y) = g(x)(y)."""
    XY = tensor_space(X, Y)
    f = GradedMap(XY, Z, g.degree)
    for x in X.labels():
        gx = g.apply_label(x)
        for y in Y.labels():
            img = {}
            for h, coeff in gx.items():
                if h[1] == y:
                    img[h[2]] = coeff
            if tensor_label(x, y) in XY:
                f.set(tensor_label(x, y), img)
    return f


def uncurry1(g: GradedMap, X: GradedSpace, Y: GradedSpace,
             Z: GradedSpace) -> GradedMap:
    """Inverse of λ¹: f(x⊗y) = (-1)^{|x||y|} g(y)(x)."""
    XY = tensor_space(X, Y)
    field = g.field
    f = GradedMap(XY, Z, g.degree)
    for y in Y.labels():
        gy = g.apply_label(y)
        for x in X.labels():
            sign = field.sign(X.degree_of(x) * Y.degree_of(y))
            img = {}
            for h, coeff in gy.items():
                if h[1] == x:
                    img[h[2]] = field.mul(sign, coeff)
            if tensor_label(x, y) in XY:
                f.set(tensor_label(x, y), img)
    return f


def strength_tensor(f: GradedMap, g: GradedMap) -> GradedMap:
    """(f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y)."""
    X, Y = f.source, g.source
    XY = tensor_space(X, Y)
    TT = tensor_space(f.target, g.target)
    field = f.field
    out = GradedMap(XY, TT, f.degree + g.degree)
    for label in XY.labels():
        _, x, y = label
        sign = field.sign(g.degree * X.degree_of(x))
        img: dict = {}
        fx = f.apply_label(x)
        gy = g.apply_label(y)
        for xt, cf in fx.items():
            for yt, cg in gy.items():
                img[tensor_label(xt, yt)] = field.mul(sign, field.mul(cf, cg))
        out.set(label, TT.project(img))
    return out


def susp_label(n: int, x) -> tuple:
    return ("s", n, x)


def suspend(X: GradedSpace, n: int, strict: bool = False) -> GradedSpace:
    """S^n(X)_i = s^n ⊗ X_{i-n}."""
    S = GradedSpace(X.field, X.window)
    for d in X.degrees():
        for x in X.basis(d):
            ok = S.add(susp_label(n, x), d + n, weight=X.weight_of(x),
                       strict=strict)
            if not ok:
                S.mark_inexact(d + n)
    for d in X.inexact_degrees():
        S.mark_inexact(d + n)
    return S


def dual_label(x) -> tuple:
    return ("d", x)


def graded_dual(X: GradedSpace) -> GradedSpace:
    """(X*)_n = (X_{-n})* with the dual basis."""
    D = GradedSpace(X.field, X.window)
    for d in X.degrees():
        for x in X.basis(d):
            D.add(dual_label(x), -d, weight=X.weight_of(x))
    for d in X.inexact_degrees():
        D.mark_inexact(-d)
    return D


def transpose(f: GradedMap, Xdual: GradedSpace, Ydual: GradedSpace) -> GradedMap:
    """ᵗf(φ) = (-1)^{|φ||f|} φ∘f, as a map Y* → X* of degree |f|.

    (A functional of degree m pulled back along a degree-n morphism kills
    everything but X_{-m-n}, so it sits in (X*)_{m+n}.)
    """
    field = f.field
    out = GradedMap(Ydual, Xdual, f.degree)
    cols: dict = {}
    for x, img in f.columns.items():
        for y, coeff in img.items():
            sign = field.sign(f.target.degree_of(y) * f.degree)
            cols.setdefault(dual_label(y), {})[dual_label(x)] = \
                field.mul(sign, coeff)
    for ylab in Ydual.labels():
        out.set(ylab, Xdual.project(cols.get(ylab, {})))
    return out


def dual_pairing(field: Field, phi: dict, vec: dict, X: GradedSpace):
    """Evaluate a dual vector (over ("d", x) labels) on a vector of X."""
    total = field.zero()
    for dx, c in phi.items():
        x = dx[1]
        if x in vec:
            total = field.add(total, field.mul(c, vec[x]))
    return total
