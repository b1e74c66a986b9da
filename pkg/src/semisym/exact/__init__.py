"""Exact arithmetic: parametric scalars, matrices, polynomials, genericity sampling."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .matrix import (
    InconsistentSystem,
    Matrix,
    Vector,
    char_poly,
    char_poly_cofactor,
    dot,
    independent_subset,
    kernel_basis,
    min_poly,
    rank,
    rref,
    same_span,
    solve_linear,
    span_contains,
    vec,
)
from .scalar import (
    ONE,
    ZERO,
    DenominatorVanishes,
    Scalar,
    ScalarLike,
    ScalarParseError,
    as_scalar,
    parse_scalar,
    symbols,
)
from .unipoly import Factor, ParametricInput, UniPoly, factor_over_rationals, factor_parametric, rational_roots

DEFAULT_SEED = 20240613

__all__ = [
    "DEFAULT_SEED",
    "DenominatorVanishes",
    "Factor",
    "InconsistentSystem",
    "Matrix",
    "ONE",
    "ParametricInput",
    "Scalar",
    "ScalarLike",
    "ScalarParseError",
    "UniPoly",
    "Vector",
    "ZERO",
    "as_scalar",
    "char_poly",
    "char_poly_cofactor",
    "dot",
    "factor_over_rationals",
    "factor_parametric",
    "generic_points",
    "independent_subset",
    "kernel_basis",
    "min_poly",
    "parse_assignment",
    "parse_scalar",
    "rank",
    "rational_roots",
    "rref",
    "same_span",
    "solve_linear",
    "span_contains",
    "substitute",
    "symbols",
    "vec",
]


def substitute(obj, assignment: Mapping[str, ScalarLike]):
    """Exact evaluation of a Scalar, Matrix, UniPoly or vector at a parameter point."""
    if isinstance(obj, (Scalar, Matrix, UniPoly)):
        return obj.subs(assignment)
    if isinstance(obj, (int, Fraction)):
        return Scalar(obj)
    if isinstance(obj, (tuple, list)):
        return type(obj)(substitute(x, assignment) for x in obj)
    raise TypeError(f"cannot substitute into {type(obj).__name__}")


def _random_rational(rng: random.Random, lo: Fraction | None, hi: Fraction | None) -> Fraction:
    if lo is not None and hi is not None:
        k = rng.randint(1, 96)
        return lo + (hi - lo) * Fraction(k, 97)
    num = rng.choice([i for i in range(-13, 14) if i])
    den = rng.randint(1, 7)
    q = Fraction(num, den)
    if lo is not None:
        q = lo + abs(q)
    elif hi is not None:
        q = hi - abs(q)
    return q


def generic_points(
    params: Sequence[str],
    count: int = 5,
    seed: int = DEFAULT_SEED,
    nonzero: Iterable[ScalarLike] = (),
    ranges: Mapping[str, tuple[Fraction | None, Fraction | None]] | None = None,
) -> list[dict[str, Fraction]]:
    """Pseudo-random rational points avoiding the locus where any ``nonzero`` expression vanishes.

    Deterministic for a given seed.  ``ranges`` optionally confines a parameter to an
    interval (either end may be ``None``).
    """
    rng = random.Random(seed)
    guards = [as_scalar(g) for g in nonzero]
    ranges = dict(ranges or {})
    points: list[dict[str, Fraction]] = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise RuntimeError("could not find admissible generic points")
        pt = {p: _random_rational(rng, *ranges.get(p, (None, None))) for p in params}
        try:
            if any(g.subs(pt).is_zero() for g in guards):
                continue
        except DenominatorVanishes:
            continue
        if pt not in points:
            points.append(pt)
    return points


def parse_assignment(text: str | None) -> dict[str, Fraction]:
    """Parse ``"a=1,b=2/3"`` into exact rationals."""
    out: dict[str, Fraction] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"expected name=value, got {item!r}")
        name, value = (s.strip() for s in item.split("=", 1))
        if not name.isidentifier():
            raise ValueError(f"invalid parameter name {name!r}")
        v = parse_scalar(value)
        if not v.is_rational:
            raise ValueError(f"value for {name} must be rational, got {value!r}")
        out[name] = v.to_fraction()
    return out
