"""Quivers, representations, Pluecker relation generation, and the
decision procedures for quiver-Dressian membership, tropical containment
and subrepresentation witnesses.

A representation fixes the ambient space K^n at every vertex; each arrow
carries an n x n matrix in a field layer (Puiseux entries), a tropical
layer (its entrywise valuation), or both.  Relation variables are labeled
(vertex, subset) so that a tuple of valuated matroids keyed by vertex
names gives an assignment directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import ShapeError, UsageError
from .matroid import (
    ValuatedMatroid,
    cocircuits,
    is_valuated_matroid,
    quotient_check,
    tls_equal,
    tls_membership,
)
from .puiseux import (
    FieldMatrix,
    PuiseuxElement,
    classical_containment,
    pluecker_valuations,
    valuation,
)
from .trop import TropMatrix, TropPolynomial, trop_matvec, trop_poly_vanishes


@dataclass(frozen=True)
class RepArrow:
    src: str
    dst: str
    field: Optional[FieldMatrix] = None
    trop: Optional[TropMatrix] = None


class QuiverRepresentation:
    """A quiver with an n x n matrix layer per arrow and a dimension
    vector bounded by the ambient dimension."""

    def __init__(self, n, vertices, arrows, dim):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices) or not vertices:
            raise UsageError("vertices must be distinct and nonempty")
        dim = dict(dim)
        if set(dim) != set(vertices):
            raise UsageError("dimension vector must cover exactly the vertices")
        for v, d in dim.items():
            if not 1 <= d <= n:
                raise UsageError("dimension %r at vertex %r outside [1..%d]" % (d, v, n))
        arrows = tuple(arrows)
        for a in arrows:
            if a.src not in dim or a.dst not in dim:
                raise UsageError("arrow %r touches an unknown vertex" % (a,))
            if a.field is None and a.trop is None:
                raise UsageError("arrow %r carries no matrix layer" % (a,))
            for mat, rows, cols in (
                (a.field, getattr(a.field, "n_rows", n), getattr(a.field, "n_cols", n)),
                (a.trop, getattr(a.trop, "n_rows", n), getattr(a.trop, "n_cols", n)),
            ):
                if mat is not None and (rows != n or cols != n):
                    raise ShapeError("arrow matrices must be %dx%d" % (n, n))
            if a.field is not None and a.trop is not None:
                if self._valuation_matrix(a.field) != a.trop:
                    raise UsageError(
                        "tropical layer of arrow %r is not the valuation of its "
                        "field layer" % (a,)
                    )
        self.n = n
        self.vertices = vertices
        self.arrows = arrows
        self.dim = dim

    @staticmethod
    def _valuation_matrix(m: FieldMatrix) -> TropMatrix:
        return TropMatrix(tuple(tuple(valuation(e) for e in row) for row in m.rows))

    def trop_matrix(self, a_idx) -> TropMatrix:
        a = self.arrows[a_idx]
        return a.trop if a.trop is not None else self._valuation_matrix(a.field)

    def field_matrix(self, a_idx) -> FieldMatrix:
        a = self.arrows[a_idx]
        if a.field is None:
            raise UsageError("arrow %d has no field layer" % a_idx)
        return a.field

    def has_field_layer(self):
        return all(a.field is not None for a in self.arrows)


def _sign(j, i_set, j_set):
    flips = sum(1 for jp in j_set if j < jp) + sum(1 for i in i_set if i > j)
    return -1 if flips % 2 else 1


def _collect(terms):
    """Sum classical coefficients over equal monomials; drop zeros."""
    acc = {}
    for coeff, mono in terms:
        acc[mono] = acc.get(mono, PuiseuxElement()) + coeff
    return tuple(sorted((m, c) for m, c in acc.items() if not c.is_zero))


def _tropicalize(classical):
    return TropPolynomial((valuation(c), m) for m, c in classical)


def grassmann_pluecker_relations(n, r, tag):
    """Nontrivial Grassmann-Pluecker relations of the rank-r Grassmannian,
    in variables labeled (tag, subset).  Yields (I, J, classical, tropical);
    classically cancelling relations are skipped."""
    for i_set in combinations(range(1, n + 1), r - 1):
        for j_set in combinations(range(1, n + 1), r + 1):
            raw = []
            for j in j_set:
                if j in i_set:
                    continue
                coeff = PuiseuxElement.const(_sign(j, i_set, j_set))
                left = (tag, tuple(sorted(i_set + (j,))))
                right = (tag, tuple(e for e in j_set if e != j))
                raw.append((coeff, tuple(sorted((left, right)))))
            classical = _collect(raw)
            if classical:
                yield i_set, j_set, classical, _tropicalize(classical)


def quiver_pluecker_relations(rep: QuiverRepresentation, a_idx):
    """Quiver Pluecker relations of one arrow.

    Yields (I, J, classical_or_None, tropical): one relation per pair of a
    (rank-1)-subset I on the source side and a (rank+1)-subset J on the
    target side, with terms sign(j;I,J) * M[i][j] * p_{I+j} * q_{J-i}.
    The classical layer is present only when the arrow has a field matrix;
    without it, colliding monomials are merged tropically by minimum.
    """
    arrow = rep.arrows[a_idx]
    n = rep.n
    r = rep.dim[arrow.src]
    s = rep.dim[arrow.dst]
    field = arrow.field
    tmat = rep.trop_matrix(a_idx)
    for i_set in combinations(range(1, n + 1), r - 1):
        for j_set in combinations(range(1, n + 1), s + 1):
            raw_classical = []
            raw_tropical = []
            for j in range(1, n + 1):
                if j in i_set:
                    continue
                left = (arrow.src, tuple(sorted(i_set + (j,))))
                for i in j_set:
                    right = (arrow.dst, tuple(e for e in j_set if e != i))
                    mono = tuple(sorted((left, right)))
                    if field is not None:
                        entry = field.entry(i - 1, j - 1)
                        if entry.is_zero:
                            continue
                        coeff = entry if _sign(j, i_set, j_set) > 0 else -entry
                        raw_classical.append((coeff, mono))
                    else:
                        tv = tmat.entry(i - 1, j - 1)
                        if tv.is_inf:
                            continue
                        raw_tropical.append((tv, mono))
            if field is not None:
                classical = _collect(raw_classical)
                yield i_set, j_set, classical, _tropicalize(classical)
            else:
                yield i_set, j_set, None, TropPolynomial.merged(raw_tropical)


def _proportional(c1, c2):
    if len(c1) != len(c2) or [m for m, _ in c1] != [m for m, _ in c2]:
        return False
    lead1, lead2 = c1[0][1], c2[0][1]
    return all(a * lead2 == b * lead1 for (_, a), (_, b) in zip(c1, c2))


def _trop_projective_key(poly: TropPolynomial):
    finite = [c for c, _ in poly.terms if c.is_finite]
    shift = min(c.value for c in finite) if finite else 0
    return tuple(
        sorted((m, None if c.is_inf else c.value - shift) for c, m in poly.terms)
    )


def all_relations(rep: QuiverRepresentation):
    """Every defining relation of the quiver Dressian: the vertex
    Grassmann-Pluecker relations plus the per-arrow quiver Pluecker
    relations, deduplicated (classically up to scalar, tropically up to a
    projective shift) and with vacuous relations dropped.

    Returns a list of dicts with keys kind, where, I, J, classical,
    tropical.
    """
    out = []
    seen_classical = []
    seen_tropical = set()

    def push(kind, where, i_set, j_set, classical, tropical):
        if classical is not None:
            for prev in seen_classical:
                if _proportional(prev, classical):
                    return
            seen_classical.append(classical)
        else:
            if not tropical.terms:
                return
            key = _trop_projective_key(tropical)
            if key in seen_tropical:
                return
            seen_tropical.add(key)
        out.append(
            {
                "kind": kind,
                "where": where,
                "I": i_set,
                "J": j_set,
                "classical": classical,
                "tropical": tropical,
            }
        )

    for v in rep.vertices:
        for i_set, j_set, classical, tropical in grassmann_pluecker_relations(
            rep.n, rep.dim[v], v
        ):
            push("vertex", v, i_set, j_set, classical, tropical)
    for a_idx in range(len(rep.arrows)):
        for i_set, j_set, classical, tropical in quiver_pluecker_relations(rep, a_idx):
            push("arrow", a_idx, i_set, j_set, classical, tropical)
    return out


def _validate_tuple(rep: QuiverRepresentation, mus):
    if set(mus) != set(rep.vertices):
        raise UsageError("matroid tuple must be keyed by exactly the vertices")
    for v in rep.vertices:
        m = mus[v]
        if m.n != rep.n:
            raise ShapeError("matroid at %r lives on [%d], ambient is [%d]"
                             % (v, m.n, rep.n))
        if m.r != rep.dim[v]:
            raise UsageError("matroid at %r has rank %d, dimension vector says %d"
                             % (v, m.r, rep.dim[v]))


def _assignment(mus, poly: TropPolynomial):
    assign = {}
    for _, mono in poly.terms:
        for vertex, subset in mono:
            assign[(vertex, subset)] = mus[vertex].value(subset)
    return assign


def qdr_membership(rep: QuiverRepresentation, mus):
    """Quiver-Dressian membership by relation vanishing.

    Every vertex matroid must satisfy the exchange axiom (the tropical
    Grassmann-Pluecker layer) and every tropical quiver Pluecker relation
    must have its minimum attained twice under p_I -> mu(I).
    Returns (bool, certificate).
    """
    _validate_tuple(rep, mus)
    for v in rep.vertices:
        ok, witness = is_valuated_matroid(mus[v])
        if not ok:
            return False, ("matroid", v, witness)
    for a_idx in range(len(rep.arrows)):
        for i_set, j_set, _, tropical in quiver_pluecker_relations(rep, a_idx):
            if not trop_poly_vanishes(tropical, _assignment(mus, tropical)):
                return False, ("relation", a_idx, i_set, j_set)
    return True, None


def containment_check(a: TropMatrix, mu: ValuatedMatroid, nu: ValuatedMatroid):
    """Is val(A) (.) trop(mu) contained in trop(nu)?

    The image is tropically generated by the images of mu's cocircuits, so
    it suffices to test each image against nu's circuits.  Returns
    (bool, (cocircuit, violating_circuit) or None).
    """
    if mu.n != nu.n:
        raise ShapeError("matroids live on different ground sets")
    if a.n_rows != nu.n or a.n_cols != mu.n:
        raise ShapeError("matrix shape does not match the ground sets")
    for c_star in cocircuits(mu):
        image = trop_matvec(a, c_star)
        ok, circ = tls_membership(nu, image)
        if not ok:
            return False, (c_star, circ)
    return True, None


def qdr_membership_via_containment(rep: QuiverRepresentation, mus):
    """Quiver-Dressian membership by per-arrow containment of tropical
    linear spaces; independent of (and cross-tested against) the
    relation-vanishing route."""
    _validate_tuple(rep, mus)
    for v in rep.vertices:
        ok, witness = is_valuated_matroid(mus[v])
        if not ok:
            return False, ("matroid", v, witness)
    for a_idx, arrow in enumerate(rep.arrows):
        ok, cert = containment_check(
            rep.trop_matrix(a_idx), mus[arrow.src], mus[arrow.dst]
        )
        if not ok:
            return False, ("containment", a_idx, cert)
    return True, None


def is_subrepresentation(rep: QuiverRepresentation, candidate):
    """Do the candidate row spans form a quiver subrepresentation?

    candidate maps each vertex to a full-row-rank d_i x n field matrix.
    Returns (bool, violating_arrow_index or None).
    """
    if set(candidate) != set(rep.vertices):
        raise UsageError("candidate must be keyed by exactly the vertices")
    for v in rep.vertices:
        m = candidate[v]
        if m.n_rows != rep.dim[v] or m.n_cols != rep.n:
            raise UsageError(
                "candidate at %r must be %dx%d" % (v, rep.dim[v], rep.n)
            )
    for a_idx, arrow in enumerate(rep.arrows):
        if not classical_containment(
            rep.field_matrix(a_idx), candidate[arrow.src], candidate[arrow.dst]
        ):
            return False, a_idx
    return True, None


def trop_qgr_witness_check(rep: QuiverRepresentation, mus, witness):
    """Does the witness certify the matroid tuple as a point of the
    tropicalized quiver Grassmannian?  The witness must be a quiver
    subrepresentation whose Pluecker valuations reproduce each matroid
    projectively.  Returns (bool, certificate)."""
    _validate_tuple(rep, mus)
    ok, a_idx = is_subrepresentation(rep, witness)
    if not ok:
        return False, ("subrepresentation", a_idx)
    for v in rep.vertices:
        realized = pluecker_valuations(witness[v])
        if not tls_equal(realized, mus[v]):
            return False, ("valuation-mismatch", v)
    return True, None


def flag_mode_check(mus_by_rank):
    """Flag-of-matroids check: consecutive quotient conditions along a
    strictly rank-increasing sequence.  Equals quiver-Dressian membership
    for the identity-arrow chain quiver.  Returns (bool, certificate)."""
    mus = list(mus_by_rank)
    if len(mus) < 2:
        raise UsageError("a flag needs at least two matroids")
    ranks = [m.r for m in mus]
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise UsageError("ranks must be strictly increasing, got %r" % (ranks,))
    for k in range(len(mus) - 1):
        ok, cert = quotient_check(mus[k], mus[k + 1])
        if not ok:
            return False, (k, cert)
    return True, None


def identity_chain_representation(n, ranks, field=True):
    """The A_k chain quiver with identity arrows, one vertex per rank."""
    vertices = ["v%d" % (k + 1) for k in range(len(ranks))]
    mats = {}
    if field:
        mats["field"] = FieldMatrix.identity(n)
    else:
        mats["trop"] = TropMatrix.identity(n)
    arrows = [
        RepArrow(src=vertices[k], dst=vertices[k + 1], **mats)
        for k in range(len(ranks) - 1)
    ]
    return QuiverRepresentation(
        n, vertices, arrows, {v: r for v, r in zip(vertices, ranks)}
    )
