"""Ground-set maps with scaling data and affine morphisms of valuated
matroids, plus the dictionary between weakly monomial matrices and maps.

A map carries, for each ground-set element i, a target f1(i) in
{1..n, o} and a tropical shift f2(i); the distinguished element o models
the origin and is encoded internally as 0.  The induced matroid of a map
restricts the pointed target matroid to the image of f1 and shifts each
basis value by the sum of the scaling data.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ShapeError, UsageError
from .matroid import ValuatedMatroid, delete, quotient_check, restrict_table
from .puiseux import FieldMatrix, PuiseuxElement, valuation
from .puiseux import ZERO as F_ZERO
from .trop import INF, TropMatrix, TropValue

O = 0  # the distinguished origin element


class GroundSetMap:
    """f = (f1, f2): [n] u {o} -> ([n] u {o}) x T, fixing o.

    ``assignments`` maps each i in 1..n to a (target, shift) pair; the
    origin is implicit (f(o) = (o, inf)).  A target of o forces an
    infinite shift.
    """

    __slots__ = ("n", "f1", "f2")

    def __init__(self, n, assignments):
        if n < 1:
            raise UsageError("ground set must be nonempty")
        f1, f2 = {O: O}, {O: INF}
        assignments = dict(assignments)
        if set(assignments) != set(range(1, n + 1)):
            raise UsageError("map must assign exactly the elements 1..%d" % n)
        for i, (target, shift) in assignments.items():
            shift = shift if isinstance(shift, TropValue) else TropValue(shift)
            if target == O or target == "o":
                if shift.is_finite:
                    raise UsageError("element %d maps to o with a finite shift" % i)
                f1[i], f2[i] = O, INF
            elif shift.is_inf:
                # an infinite shift kills every basis through i, exactly as
                # mapping i to the origin does; normalize to the o case
                f1[i], f2[i] = O, INF
            else:
                if not 1 <= target <= n:
                    raise UsageError("target %r outside [1..%d]" % (target, n))
                f1[i], f2[i] = int(target), shift
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)

    def __setattr__(self, name, v):
        raise AttributeError("GroundSetMap is immutable")

    def __eq__(self, other):
        if not isinstance(other, GroundSetMap):
            return NotImplemented
        return self.n == other.n and self.f1 == other.f1 and self.f2 == other.f2

    def __repr__(self):
        body = ", ".join(
            "%d->(%s, %r)" % (i, self.f1[i] if self.f1[i] != O else "o", self.f2[i])
            for i in range(1, self.n + 1)
        )
        return "GroundSetMap(%s)" % body

    @classmethod
    def identity(cls, n):
        return cls(n, {i: (i, 0) for i in range(1, n + 1)})


def affine_induced(nu: ValuatedMatroid, f: GroundSetMap) -> ValuatedMatroid:
    """The affine induced valuated matroid of f against nu, as a pointed
    matroid on [n] u {o} with o stored at position n+1.

    The target matroid is restricted to the image of f1; a basis B gets
    the restricted value at f1(B) plus the sum of the shifts f2(i) over B.
    Bases on which f1 is not injective, or which touch o (directly or via
    f1), are valued infinity.
    """
    if f.n != nu.n:
        raise ShapeError("map and matroid ground sets differ")
    image = {f.f1[i] for i in range(1, f.n + 1) if f.f1[i] != O}
    rank, table = restrict_table(nu, image)
    o_pos = f.n + 1
    values = {}
    for basis in combinations(range(1, f.n + 1), rank):
        targets = [f.f1[i] for i in basis]
        if O in targets or len(set(targets)) != len(targets):
            continue
        base_val = table.get(tuple(sorted(targets)), INF)
        if base_val.is_inf:
            continue
        total = base_val
        for i in basis:
            total = total + f.f2[i]
        if total.is_finite:
            values[basis] = total
    # every basis through o stays infinite: o is a loop
    return ValuatedMatroid(o_pos, rank, values)


def affine_induced_unpointed(nu: ValuatedMatroid, f: GroundSetMap) -> ValuatedMatroid:
    """The affine induced matroid with the origin loop removed."""
    ind = affine_induced(nu, f)
    return delete(ind, ind.n)


def is_affine_morphism(f: GroundSetMap, mu: ValuatedMatroid, nu: ValuatedMatroid):
    """Is f: mu -> nu an affine morphism, i.e. is the affine induced
    matroid of nu a quotient of mu?

    A rank-order failure (induced rank exceeding rank(mu)) is reported as
    a negative verdict with certificate, not an error.
    """
    if mu.n != nu.n or f.n != mu.n:
        raise ShapeError("map and matroids must share a ground set size")
    ind = affine_induced_unpointed(nu, f)
    if ind.r > mu.r:
        return False, ("rank-order", ind.r, mu.r)
    return quotient_check(ind, mu)


def is_weakly_monomial(a: FieldMatrix) -> bool:
    """At most one nonzero entry in each row."""
    return all(sum(1 for e in row if not e.is_zero) <= 1 for row in a.rows)


def associated_map(a: FieldMatrix) -> GroundSetMap:
    """The map of a square weakly monomial matrix: a zero row i goes to
    (o, inf); otherwise i goes to the column of its nonzero entry with the
    entry's valuation as shift."""
    if a.n_rows != a.n_cols:
        raise UsageError("associated map needs a square matrix")
    if not is_weakly_monomial(a):
        raise UsageError("matrix is not weakly monomial")
    assignments = {}
    for i, row in enumerate(a.rows, start=1):
        hit = [(j + 1, e) for j, e in enumerate(row) if not e.is_zero]
        if not hit:
            assignments[i] = (O, INF)
        else:
            j, e = hit[0]
            assignments[i] = (j, valuation(e))
    return GroundSetMap(a.n_rows, assignments)


def associated_matrix(f: GroundSetMap):
    """One field matrix representative of f (entries t**f2(i)) together
    with its entrywise valuation, which is the unique tropical matrix of f.

    Requires finite shifts wherever f1 avoids o, so that a field element
    of the prescribed valuation exists.
    """
    n = f.n
    rows = []
    trows = []
    for i in range(1, n + 1):
        row = [F_ZERO] * n
        trow = [INF] * n
        if f.f1[i] != O:
            if f.f2[i].is_inf:
                raise UsageError(
                    "no field element has infinite valuation at element %d" % i
                )
            row[f.f1[i] - 1] = PuiseuxElement.t_power(f.f2[i].value)
            trow[f.f1[i] - 1] = f.f2[i]
        rows.append(tuple(row))
        trows.append(tuple(trow))
    return FieldMatrix(rows), TropMatrix(trows)


def decompose_weakly_monomial(a: FieldMatrix):
    """Write a square weakly monomial A as D * B with B a 0/1 weakly
    monomial support pattern and D a full-rank diagonal matrix (zero rows
    get diagonal entry 1)."""
    if a.n_rows != a.n_cols:
        raise UsageError("decomposition needs a square matrix")
    if not is_weakly_monomial(a):
        raise UsageError("matrix is not weakly monomial")
    n = a.n_rows
    one = PuiseuxElement.const(1)
    b_rows, d_rows = [], []
    for i, row in enumerate(a.rows):
        hit = [(j, e) for j, e in enumerate(row) if not e.is_zero]
        b_row = [F_ZERO] * n
        d_row = [F_ZERO] * n
        if hit:
            j, e = hit[0]
            b_row[j] = one
            d_row[i] = e
        else:
            d_row[i] = one
        b_rows.append(tuple(b_row))
        d_rows.append(tuple(d_row))
    return FieldMatrix(b_rows), FieldMatrix(d_rows)


def matrix_product(x: FieldMatrix, y: FieldMatrix) -> FieldMatrix:
    if x.n_cols != y.n_rows:
        raise ShapeError("matrix product shape mismatch")
    return FieldMatrix(
        tuple(
            tuple(
                sum((x.entry(i, k) * y.entry(k, j) for k in range(x.n_cols)), F_ZERO)
                for j in range(y.n_cols)
            )
            for i in range(x.n_rows)
        )
    )


def compose_maps(g: GroundSetMap, h: GroundSetMap) -> GroundSetMap:
    """The composite map applying g first:
    (h o g)(i) = (h1(g1(i)), g2(i) + h2(g1(i))), with absorbing addition."""
    if g.n != h.n:
        raise ShapeError("maps have different ground set sizes")
    assignments = {}
    for i in range(1, g.n + 1):
        mid = g.f1[i]
        assignments[i] = (h.f1[mid], g.f2[i] + h.f2[mid])
    return GroundSetMap(g.n, assignments)


def image_equals_induced(f: GroundSetMap, mu: ValuatedMatroid):
    """Verify trop(f^{-1}(mu)) = val(A_f) (.) trop(mu) by generators:
    every cocircuit of the induced matroid must lie in the tropical span
    of the matrix images of mu's cocircuits, and every such image must
    satisfy the circuit conditions of the induced matroid."""
    from .matroid import cocircuits, tls_membership
    from .trop import trop_matvec, trop_span_membership

    _, a_trop = associated_matrix(f)
    ind = affine_induced_unpointed(mu, f)
    images = [trop_matvec(a_trop, c) for c in cocircuits(mu)]
    usable = [y for y in images if not y.is_all_inf]
    for c in cocircuits(ind):
        if not usable:
            return False, ("no-generators", c)
        ok, _, coord = trop_span_membership(usable, c, projective=True)
        if not ok:
            return False, ("span", c, coord)
    for y in images:
        ok, circ = tls_membership(ind, y)
        if not ok:
            return False, ("circuit", y, circ)
    return True, None
