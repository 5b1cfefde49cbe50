"""Graded Betti numbers and Castelnuovo-Mumford regularity of monomial ideals.

Three exact routes, all reporting the table of the ideal itself
(``beta[0, j]`` counts minimal generators of degree ``j``):

* ``hochster_betti`` -- squarefree ideals, reduced homology of restrictions
  of the Stanley-Reisner complex;
* ``taylor_betti`` -- any ideal, homology of the Taylor complex tensored down
  to the field, one multidegree (lcm) at a time;
* ``koszul_betti`` -- any ideal, reduced homology of the upper Koszul
  simplicial complexes ``K^b`` for ``b`` in the lcm lattice.  Its complexes
  live on the support of ``b``, so it stays small for high powers where the
  polarization has too many variables for Hochster's formula.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .graph import iter_bits
from .linalg import rank
from .monomials import MonomialIdeal, polarize

TAYLOR_MAX_GENS = 22
KOSZUL_MAX_BOX = 4_000_000
def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class FieldChoice:
    characteristic: int = 2

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.characteristic}")


def as_field(field_: int | FieldChoice) -> FieldChoice:
    return field_ if isinstance(field_, FieldChoice) else FieldChoice(field_)


@dataclass(frozen=True)
class BettiTable:
    entries: dict[tuple[int, int], int]
    field_char: int = 2

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table has no regularity")
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (ii, j), v in self.entries.items() if ii == i}

    def to_dict(self) -> dict:
        return {"field": self.field_char,
                "entries": [[i, j, v] for (i, j), v in self.entries.items()],
                "reg": self.regularity, "pd": self.projective_dimension}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> BettiTable:
        return cls({(i, j): v for i, j, v in data["entries"]}, data["field"])

    def render(self) -> str:
        """Aligned text, one row per homological index ``i`` and one column per degree ``j``."""
        if not self.entries:
            return "(zero)\n"
        js = sorted({j for _, j in self.entries})
        width = max(3, *(len(str(v)) for v in self.entries.values()), *(len(str(j)) for j in js))
        head = "i\\j " + " ".join(f"{j:>{width}}" for j in js)
        lines = [head]
        for i in range(self.projective_dimension + 1):
            cells = [f"{self.entries[(i, j)]:>{width}}" if (i, j) in self.entries else f"{'.':>{width}}"
                     for j in js]
            lines.append(f"{i:>3} " + " ".join(cells))
        return "\n".join(lines) + "\n"


# -- simplicial complexes ---------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``names`` given by its minimal non-faces (bit masks)."""

    names: tuple[str, ...]
    minimal_nonfaces: tuple[int, ...]

    @property
    def ground(self) -> int:
        return (1 << len(self.names)) - 1

    def is_face(self, mask: int) -> bool:
        return all(nf & ~mask for nf in self.minimal_nonfaces)

    def faces(self, within: int | None = None) -> list[int]:
        return list(enumerate_faces(self.ground if within is None else within, self.minimal_nonfaces))

    def facets(self) -> list[tuple[str, ...]]:
        fs = self.faces()
        maximal = [f for f in fs if not any(g != f and g & f == f for g in fs)]
        return sorted(tuple(self.names[i] for i in iter_bits(f)) for f in maximal)

    def reduced_homology(self, field_: int | FieldChoice = 2, within: int | None = None) -> dict[int, int]:
        return reduced_homology(self.faces(within), as_field(field_).characteristic)


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    if not I.is_squarefree:
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal; polarize first")
    _check_proper(I)
    return SimplicialComplex(I.context.names, tuple(g.support for g in I.gens))


def enumerate_faces(W: int, nonfaces: Iterable[int]) -> Iterator[int]:
    """Faces inside ``W`` avoiding every non-face, by increasing-vertex DFS."""
    by_top: dict[int, list[int]] = defaultdict(list)
    for nf in nonfaces:
        if nf & ~W == 0:
            by_top[nf.bit_length() - 1].append(nf)
    verts = list(iter_bits(W))
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        yield face
        for pos in range(start, len(verts)):
            v = verts[pos]
            new = face | 1 << v
            if any(nf & ~new == 0 for nf in by_top.get(v, ())):
                continue
            stack.append((new, pos + 1))


def reduced_homology(faces: Iterable[int], characteristic: int = 2) -> dict[int, int]:
    """Reduced homology dimensions ``{d: dim}`` (nonzero only).

    ``faces`` must be closed under subsets.  The void complex (no faces) has
    no homology; the complex ``{empty}`` has a one-dimensional ``H_{-1}``.
    """
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_dim[f.bit_count() - 1].append(f)
    if not by_dim:
        return {}
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        lower = index.get(d - 1, {})
        for f in by_dim.get(d, ()):
            row = {}
            for k, v in enumerate(iter_bits(f)):
                row[lower[f & ~(1 << v)]] = -1 if k % 2 else 1
            rows.append(row)
        ranks[d] = rank(rows, len(lower), characteristic) if rows else 0
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def _check_proper(I: MonomialIdeal):
    if I.is_zero:
        raise ValueError("zero ideal: Betti numbers and regularity are not defined here")
    if I.is_unit:
        raise ValueError("unit ideal: Betti numbers and regularity are not defined here")


# -- Hochster ---------------------------------------------------------------

def support_unions(supports: Iterable[int]) -> set[int]:
    """All unions of subsets of ``supports`` (the empty union included)."""
    out = {0}
    for s in set(supports):
        out |= {w | s for w in out}
    return out


def hochster_betti(I: MonomialIdeal, field_: int | FieldChoice = 2, *, full_scan: bool = False) -> BettiTable:
    """Betti table of a squarefree ideal via Hochster's formula.

    ``beta_{i,W}(S/I) = dim H~_{|W|-i-1}(Delta_W)``, shifted by one homological
    step to describe ``I``.  Only vertex sets ``W`` that are unions of generator
    supports can contribute (otherwise ``Delta_W`` is a cone); ``full_scan``
    walks all ``2^n`` subsets instead and skips cones explicitly.
    """
    char = as_field(field_).characteristic
    if not I.is_squarefree:
        raise ValueError("Hochster's formula needs a squarefree ideal; polarize first")
    _check_proper(I)
    supports = [g.support for g in I.gens]
    if full_scan:
        candidates = (W for W in range(1, 1 << I.nvars) if not _has_cone_vertex(W, supports))
    else:
        candidates = (W for W in support_unions(supports) if W)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for W in candidates:
        size = W.bit_count()
        for d, h in reduced_homology(enumerate_faces(W, supports), char).items():
            i_quot = size - d - 1
            entries[(i_quot - 1, size)] += h
    return BettiTable(dict(entries), char)


def _has_cone_vertex(W: int, supports: list[int]) -> bool:
    inside = 0
    for s in supports:
        if s & ~W == 0:
            inside |= s
    return inside != W


# -- Taylor -----------------------------------------------------------------

def taylor_betti(I: MonomialIdeal, field_: int | FieldChoice = 2) -> BettiTable:
    """Betti table from the Taylor complex: subsets of generators graded by lcm;
    after tensoring with the field only faces with equal lcm stay connected."""
    char = as_field(field_).characteristic
    _check_proper(I)
    r = len(I.gens)
    if r > TAYLOR_MAX_GENS:
        raise ResourceLimitError(f"Taylor complex on {r} generators needs 2^{r} cells; "
                         f"limit is {TAYLOR_MAX_GENS} generators")
    gens = [g.exps for g in I.gens]
    lcms: list[tuple[int, ...]] = [()] * (1 << r)
    lcms[0] = (0,) * I.nvars
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for mask in range(1, 1 << r):
        low = (mask & -mask).bit_length() - 1
        lcms[mask] = tuple(map(max, lcms[mask & (mask - 1)], gens[low]))
        groups[lcms[mask]].append(mask)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for b, masks in groups.items():
        deg = sum(b)
        by_size: dict[int, list[int]] = defaultdict(list)
        for m in masks:
            by_size[m.bit_count()].append(m)
        index = {sz: {m: k for k, m in enumerate(ms)} for sz, ms in by_size.items()}
        ranks = {}
        for sz, ms in by_size.items():
            lower = index.get(sz - 1)
            if not lower:
                ranks[sz] = 0
                continue
            rows = []
            for m in ms:
                row = {}
                for k, v in enumerate(iter_bits(m)):
                    face = m & ~(1 << v)
                    if face in lower:
                        row[lower[face]] = -1 if k % 2 else 1
                rows.append(row)
            ranks[sz] = rank(rows, len(lower), char)
        for sz, ms in by_size.items():
            h = len(ms) - ranks.get(sz, 0) - ranks.get(sz + 1, 0)
            if h:
                entries[(sz - 1, deg)] += h
    return BettiTable(dict(entries), char)


# -- upper Koszul complexes on the lcm lattice ------------------------------

def lcm_lattice_closure(I: MonomialIdeal) -> set[tuple[int, ...]]:
    """Closure of the generators under pairwise lcm (slow reference for ``lcm_lattice``)."""
    gens = {g.exps for g in I.gens}
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(map(max, x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _lattice_box(I: MonomialIdeal):
    """Walk the exponent box below the top lcm in lexicographic order.

    For every point ``b`` record whether ``x^b`` lies in ``I`` and the lcm of
    the generators dividing it; ``b`` is in the lcm lattice iff that lcm is ``b``.
    """
    n = I.nvars
    top = [max(g.exps[i] for g in I.gens) for i in range(n)]
    dims = [t + 1 for t in top]
    strides = [1] * n
    for i in range(n - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    size = strides[0] * dims[0] if n else 1
    if size > KOSZUL_MAX_BOX:
        raise ResourceLimitError(f"exponent box has {size} points; limit is {KOSZUL_MAX_BOX}")
    below: list[tuple[int, ...] | None] = [None] * size
    for g in I.gens:
        below[sum(e * s for e, s in zip(g.exps, strides))] = g.exps
    lattice = []
    point = [0] * n
    for idx in range(size):
        if below[idx] is None:
            acc = None
            for i in range(n):
                if point[i]:
                    prev = below[idx - strides[i]]
                    if prev is not None:
                        acc = prev if acc is None else tuple(map(max, acc, prev))
            below[idx] = acc
        if below[idx] is not None and below[idx] == tuple(point):
            lattice.append(tuple(point))
        for i in range(n - 1, -1, -1):
            point[i] += 1
            if point[i] < dims[i]:
                break
            point[i] = 0
    return below, strides, lattice


def lcm_lattice(I: MonomialIdeal) -> set[tuple[int, ...]]:
    return set(_lattice_box(I)[2])


def koszul_betti(I: MonomialIdeal, field_: int | FieldChoice = 2) -> BettiTable:
    """``beta_{i,b}(I) = dim H~_{i-1}(K^b)`` with ``K^b = {F in supp(b) : x^(b-F) in I}``."""
    char = as_field(field_).characteristic
    _check_proper(I)
    below, strides, lattice = _lattice_box(I)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for b in lattice:
        supp = [i for i, e in enumerate(b) if e]
        base = sum(e * s for e, s in zip(b, strides))
        faces = []
        for mask in range(1 << len(supp)):
            idx = base
            for k in iter_bits(mask):
                idx -= strides[supp[k]]
            if below[idx] is not None:
                faces.append(mask)
        deg = sum(b)
        for d, h in reduced_homology(faces, char).items():
            entries[(d + 1, deg)] += h
    return BettiTable(dict(entries), char)


# -- front door -------------------------------------------------------------

METHODS = ("auto", "hochster", "taylor", "koszul")


@lru_cache(maxsize=4096)
def betti_table(I: MonomialIdeal, field_: int | FieldChoice = 2, method: str = "auto") -> BettiTable:
    """Betti table of ``I``; non-squarefree input is polarized for the Hochster route.

    ``auto`` picks Hochster for squarefree ideals and the Koszul route
    otherwise (polarizing powers inflates the ring far more than the lcm
    lattice grows).
    """
    fc = as_field(field_)
    _check_proper(I)
    if method == "auto":
        method = "hochster" if I.is_squarefree else "koszul"
    if method == "hochster":
        target = I if I.is_squarefree else polarize(I).ideal
        return hochster_betti(target, fc)
    if method == "taylor":
        return taylor_betti(I, fc)
    if method == "koszul":
        return koszul_betti(I, fc)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def regularity(I: MonomialIdeal, field_: int | FieldChoice = 2, method: str = "auto",
               cross_check: bool = False) -> int:
    """``max{j - i : beta_{i,j}(I) != 0}``.

    With ``cross_check`` the Taylor route is run as well when the generator
    count allows it, and any disagreement raises ``AssertionError``.
    """
    reg = betti_table(I, field_, method).regularity
    if cross_check and len(I.gens) <= 12:
        other = taylor_betti(I, field_).regularity
        if other != reg:
            raise AssertionError(f"regularity disagreement on {I}: {reg} vs Taylor {other}")
    return reg


def is_k_steps_linear(B: BettiTable, s: int, k: int) -> bool:
    """``beta_{i,j} = 0`` for ``1 <= i <= k`` and ``j != i + 2s`` (ideal generated in degree 2s)."""
    gen_degrees = set(B.row(0))
    if gen_degrees != {2 * s}:
        raise ValueError(f"table is not of an ideal generated in degree {2 * s} (degrees {sorted(gen_degrees)})")
    return all(j == i + 2 * s for (i, j) in B.entries if 1 <= i <= k)


def is_linear(B: BettiTable, s: int) -> bool:
    return is_k_steps_linear(B, s, B.projective_dimension)
