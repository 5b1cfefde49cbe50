"""Exact monomial and monomial-ideal arithmetic over a fixed variable context."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names.

    ``origins[i] = (base, copy)`` records where a polarization variable came
    from; ordinary variables are their own base with copy 0.
    """

    names: tuple[str, ...]
    origins: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        if not self.origins:
            object.__setattr__(self, "origins", tuple((i, 0) for i in range(len(self.names))))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None


@dataclass(frozen=True)
class Monomial:
    exps: tuple[int, ...]
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("negative exponent")
        object.__setattr__(self, "degree", sum(self.exps))

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> Monomial:
        e = [0] * nvars
        e[i] = 1
        return cls(tuple(e))

    @classmethod
    def from_support(cls, indices: Iterable[int], nvars: int) -> Monomial:
        e = [0] * nvars
        for i in indices:
            e[i] += 1
        return cls(tuple(e))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(a * k for a in self.exps))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError("monomial division is not exact")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(min, self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(max, self.exps, other.exps)))

    @property
    def support(self) -> int:
        mask = 0
        for i, e in enumerate(self.exps):
            if e:
                mask |= 1 << i
        return mask

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def sort_key(self):
        return (self.degree, tuple(-e for e in self.exps))

    def format(self, ctx: VariableContext, compact: bool | None = None) -> str:
        """``a^2*b`` style; ``compact`` drops the ``*`` (default: when all names are one character)."""
        if compact is None:
            compact = all(len(nm) == 1 for nm in ctx.names)
        parts = [nm if e == 1 else f"{nm}^{e}" for nm, e in zip(ctx.names, self.exps) if e]
        if not parts:
            return "1"
        return ("" if compact else "*").join(parts)


_JUXTA = re.compile(r"([A-Za-z]'*)(?:\^(\d+))?")


def _factors(text: str, known=None, juxtaposition: bool = False) -> list[tuple[str, int]]:
    """Split a monomial into ``(name, exponent)`` pairs.

    ``*`` separates factors.  With ``juxtaposition``, a factor like ``a^2bd``
    that is not itself a known name is read as one-letter variables.
    """
    out = []
    for factor in text.split("*"):
        factor = factor.strip()
        m = re.fullmatch(r"([^\s^*]+)\s*(?:\^\s*(\d+))?", factor)
        name = m.group(1) if m else None
        if (juxtaposition and (known is None or name not in known)
                and re.fullmatch(r"(?:[A-Za-z]'*(?:\^\d+)?){2,}", factor)):
            out.extend((g.group(1), int(g.group(2) or 1)) for g in _JUXTA.finditer(factor))
        elif m:
            out.append((name, int(m.group(2) or 1)))
        else:
            raise ValueError(f"cannot parse factor {factor!r}")
    return out


def parse_monomial(text: str, ctx: VariableContext, juxtaposition: bool = False) -> Monomial:
    """Parse ``a^2*b*d`` (or ``a^2bd`` for one-letter names when ``juxtaposition`` is set)."""
    text = text.strip()
    e = [0] * len(ctx)
    if text == "1":
        return Monomial(tuple(e))
    for name, k in _factors(text, set(ctx.names), juxtaposition):
        e[ctx.index(name)] += k
    return Monomial(tuple(e))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators in (degree, lex) order."""

    context: VariableContext
    gens: tuple[Monomial, ...]

    @property
    def nvars(self) -> int:
        return len(self.context)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def degrees(self) -> list[int]:
        return [g.degree for g in self.gens]

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def format(self, compact: bool | None = None) -> str:
        return "(" + ", ".join(g.format(self.context, compact) for g in self.gens) + ")"

    def serialize(self) -> str:
        return "".join(g.format(self.context, compact=False) + "\n" for g in self.gens)

    def __str__(self):
        return self.format()


def minimalize(gens: Iterable[Monomial], context: VariableContext) -> MonomialIdeal:
    """Keep the divisibility-minimal elements of ``gens``."""
    cands = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    kept_masks: list[int] = []
    for g in cands:
        gm = g.support
        if any(km & ~gm == 0 and k.divides(g) for k, km in zip(kept, kept_masks)):
            continue
        kept.append(g)
        kept_masks.append(gm)
    return MonomialIdeal(context, tuple(kept))


def ideal(gens: Iterable[Monomial], context: VariableContext) -> MonomialIdeal:
    return minimalize(gens, context)


def parse_ideal(text: str, context: VariableContext | None = None,
                juxtaposition: bool = False) -> MonomialIdeal:
    """One generator per line (or comma separated); ``#`` starts a comment.

    Without a context, variables are taken in first-appearance order.
    """
    items = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        items.extend(tok.strip() for tok in line.split(",") if tok.strip())
    if context is None:
        names: dict[str, None] = {}
        for it in items:
            if it == "1":
                continue
            for name, _ in _factors(it, juxtaposition=juxtaposition):
                names.setdefault(name)
        context = VariableContext(tuple(names))
    return minimalize((parse_monomial(it, context, juxtaposition) for it in items), context)


def edge_ideal(G: Graph) -> MonomialIdeal:
    """Squarefree quadratic ideal of ``G`` in the ring on ``V(G)``; zero if edgeless."""
    ctx = VariableContext(G.vertices)
    return minimalize((Monomial.from_support(e, G.n) for e in G.edge_indices()), ctx)


def _check_context(I: MonomialIdeal, J: MonomialIdeal):
    if I.context != J.context:
        raise ValueError("ideals live in different variable contexts")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_context(I, J)
    return minimalize((g * h for g in I.gens for h in J.gens), I.context)


def ideal_sum(I: MonomialIdeal, *more: MonomialIdeal | Monomial) -> MonomialIdeal:
    gens = list(I.gens)
    for J in more:
        if isinstance(J, Monomial):
            gens.append(J)
        else:
            _check_context(I, J)
            gens.extend(J.gens)
    return minimalize(gens, I.context)


def unit_ideal(ctx: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, (Monomial.one(len(ctx)),))


@lru_cache(maxsize=512)
def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^n``, minimalized; ``n = 0`` gives the unit ideal."""
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return unit_ideal(I.context)
    if n == 1:
        return I
    half = power(I, n // 2)
    out = product(half, half)
    return product(out, I) if n % 2 else out


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``(I : m)`` generated by ``g / gcd(g, m)``."""
    return minimalize((g / g.gcd(m) for g in I.gens), I.context)


def contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J`` is contained in ``I``."""
    _check_context(I, J)
    return all(g in I for g in J.gens)


def restrict_context(I: MonomialIdeal, keep: Sequence[int]) -> MonomialIdeal:
    """Re-express ``I`` over the variables ``keep`` (which must cover every support)."""
    keep = list(keep)
    dropped = set(range(I.nvars)) - set(keep)
    if any(g.exps[i] for g in I.gens for i in dropped):
        raise ValueError("generator uses a dropped variable")
    ctx = VariableContext(tuple(I.context.names[i] for i in keep))
    return MonomialIdeal(ctx, tuple(sorted((Monomial(tuple(g.exps[i] for i in keep)) for g in I.gens),
                                           key=Monomial.sort_key)))


# -- polarization -------------------------------------------------------

def prime_name(base: str, copy: int, taken: set[str]) -> str:
    """``z'`` for copy 1, ``z''`` for copy 2, numeric suffix if the name is taken."""
    name = base + "'" * copy
    k = 2
    while name in taken:
        name = f"{base}{chr(39) * copy}{k}"
        k += 1
    return name


@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    copies: dict[int, tuple[int, ...]]  # base variable -> its variables in the new context

    def depolarize_support(self, mask: int, nbase: int) -> tuple[int, ...]:
        """Multidegree over the base variables of a squarefree multidegree ``mask``."""
        out = [0] * nbase
        for base, idxs in self.copies.items():
            out[base] = sum(1 for i in idxs if mask >> i & 1)
        return tuple(out)


def polarize(I: MonomialIdeal) -> Polarization:
    """Replace ``x^a`` by ``x x' ... x^(a-1 primes)``; squarefree ideals map to themselves."""
    ctx = I.context
    top = [max((g.exps[i] for g in I.gens), default=0) for i in range(len(ctx))]
    names = list(ctx.names)
    origins = list(ctx.origins)
    taken = set(names)
    copies = {i: [i] for i in range(len(ctx))}
    for i, a in enumerate(top):
        for c in range(1, a):
            nm = prime_name(ctx.names[i], c, taken)
            taken.add(nm)
            copies[i].append(len(names))
            names.append(nm)
            origins.append((ctx.origins[i][0], ctx.origins[i][1] + c))
    new_ctx = VariableContext(tuple(names), tuple(origins))
    gens = []
    for g in I.gens:
        gens.append(Monomial.from_support((copies[i][c] for i, e in enumerate(g.exps) for c in range(e)),
                                          len(names)))
    return Polarization(minimalize(gens, new_ctx), {i: tuple(v) for i, v in copies.items()})


def polarized_variable_count(I: MonomialIdeal) -> int:
    return sum(max((g.exps[i] for g in I.gens), default=0) or 1 for i in range(I.nvars))
