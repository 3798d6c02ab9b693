"""Edge ideals, their jet ideals and radicals, and Macaulay2 export.

All data is monomial-combinatorial: a variable is a (base, level) pair, a
monomial is a sorted variable tuple, and polynomials appearing here have
unit coefficients throughout because inputs are restricted to squarefree
monomial generators (repeated variables would introduce multinomial
coefficients, which this module refuses rather than drops).

Canonical order everywhere: variables by (base, level); monomial lists by
degree then lexicographically. The Macaulay2 export is byte-stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .graphs import Graph


class NonSquarefreeInput(ValueError):
    """A generator repeats a variable; jets of such ideals are out of scope."""


class NotQuadratic(ValueError):
    """A generator is not a product of two distinct variables."""


class JetVariable(NamedTuple):
    base: int
    level: int


Monomial = tuple[JetVariable, ...]


@dataclass(frozen=True)
class JetPolynomial:
    """Sum of distinct unit-coefficient monomials, terms canonically sorted."""

    terms: tuple[Monomial, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in the ring on ``n_vars`` bases and ``levels`` levels.

    ``levels`` is 1 for ideals in the base ring (plain edge ideals); jet
    radicals at order s carry levels = s + 1. Generators are squarefree
    and pairwise non-dividing.
    """

    n_vars: int
    levels: int
    gens: tuple[Monomial, ...]
    labels: tuple[str, ...] | None = None


def _mono_key(m: Monomial) -> tuple[int, Monomial]:
    return (len(m), m)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """One squarefree degree-2 generator per edge; the zero ideal if edgeless."""
    gens = tuple(
        (JetVariable(i, 0), JetVariable(k, 0)) for i, k in g.edges()
    )
    return MonomialIdeal(g.n, 1, tuple(sorted(gens, key=_mono_key)), g.labels)


def _base_generator_supports(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    supports = []
    for gen in ideal.gens:
        if any(v.level != 0 for v in gen):
            raise ValueError("jet substitution applies to base-ring ideals only")
        bases = tuple(v.base for v in gen)
        if len(set(bases)) != len(bases):
            raise NonSquarefreeInput(f"generator {gen} repeats a variable")
        supports.append(bases)
    return supports


def jet_ideal_generators(ideal: MonomialIdeal, s: int) -> list[JetPolynomial]:
    """Coefficient polynomials of the truncated power-series substitution.

    For a generator on bases b_1..b_r and each k = 0..s, the polynomial
    sums the monomials with one variable per base and levels adding to k.
    Output order is generator-major, then k.
    """
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    polys = []
    for bases in _base_generator_supports(ideal):
        r = len(bases)
        for k in range(s + 1):
            terms = [
                tuple(JetVariable(b, j) for b, j in zip(bases, js))
                for js in product(range(k + 1), repeat=r)
                if sum(js) == k
            ]
            polys.append(JetPolynomial(tuple(sorted(terms, key=_mono_key))))
    return polys


def radical_jet_generators(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """Radical of the order-s jet ideal, by its closed-form generators:
    one variable per base of each generator, with levels summing to <= s."""
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    gens = []
    for bases in _base_generator_supports(ideal):
        for js in product(range(s + 1), repeat=len(bases)):
            if sum(js) <= s:
                gens.append(tuple(JetVariable(b, j) for b, j in zip(bases, js)))
    return MonomialIdeal(
        ideal.n_vars, s + 1, tuple(sorted(set(gens), key=_mono_key)), ideal.labels
    )


def graph_from_quadratic_ideal(ideal: MonomialIdeal) -> Graph:
    """Graph whose edges are the generators of a squarefree quadratic ideal.

    Vertices are all n_vars*levels variables in level-major flat order, so
    radicals of jet ideals of edge ideals map back onto the jet graph
    index-for-index.
    """
    n = ideal.n_vars * ideal.levels
    edges = []
    for gen in ideal.gens:
        if len(gen) != 2 or gen[0] == gen[1]:
            raise NotQuadratic(f"generator {gen} is not squarefree of degree 2")
        for v in gen:
            if not (0 <= v.base < ideal.n_vars and 0 <= v.level < ideal.levels):
                raise ValueError(f"variable {v} outside the ambient ring")
        edges.append(
            (
                gen[0].level * ideal.n_vars + gen[0].base,
                gen[1].level * ideal.n_vars + gen[1].base,
            )
        )
    if ideal.levels == 1:
        labels = ideal.labels
    else:
        base = [
            ideal.labels[i] if ideal.labels is not None else str(i)
            for i in range(ideal.n_vars)
        ]
        labels = tuple(
            f"{base[i]}_{j}" for j in range(ideal.levels) for i in range(ideal.n_vars)
        )
    return Graph.from_edges(n, edges, labels)


_M2_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")


def _m2_base_names(n_vars: int, labels: Sequence[str] | None) -> list[str]:
    if labels is not None and all(_M2_NAME.match(lb) for lb in labels):
        return list(labels)
    return [f"x{i}" for i in range(n_vars)]


def _m2_names(n_vars: int, levels: int, labels: Sequence[str] | None) -> list[str]:
    base = _m2_base_names(n_vars, labels)
    if levels == 1:
        return base
    return [f"{base[i]}_{j}" for j in range(levels) for i in range(n_vars)]


def export_macaulay2(
    obj: MonomialIdeal | Sequence[JetPolynomial],
    *,
    n_vars: int | None = None,
    levels: int | None = None,
    labels: Sequence[str] | None = None,
) -> str:
    """Macaulay2 script declaring the ring over QQ, the ideal, and a
    minimal-primes query (whose answer lists the minimal vertex covers).

    One statement per line, trailing newline, byte-stable for fixed input.
    For a bare polynomial list the ambient ring is inferred from the
    variables present unless given explicitly.
    """
    if isinstance(obj, MonomialIdeal):
        n_vars, levels, labels = obj.n_vars, obj.levels, obj.labels
        names = _m2_names(n_vars, levels, labels)
        gen_strs = [_m2_monomial(m, n_vars, names) for m in obj.gens]
    else:
        polys = list(obj)
        seen = [v for p in polys for m in p.terms for v in m]
        if n_vars is None:
            n_vars = max((v.base for v in seen), default=0) + 1
        if levels is None:
            levels = max((v.level for v in seen), default=0) + 1
        names = _m2_names(n_vars, levels, labels)
        gen_strs = [
            "+".join(_m2_monomial(m, n_vars, names) for m in p.terms) for p in polys
        ]
    ring = f"R = QQ[{','.join(names)}];"
    body = f"I = ideal({','.join(gen_strs)});" if gen_strs else "I = ideal(0_R);"
    return "\n".join([ring, body, "print minimalPrimes I;", ""])


def _m2_monomial(m: Monomial, n_vars: int, names: list[str]) -> str:
    return "*".join(names[v.level * n_vars + v.base] for v in m)
