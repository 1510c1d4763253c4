"""Turn family construction data into concrete quadrature rules.

Nodes come from the root finder (plus any fixed endpoint node); weights
come straight from the closed-form denominators A / (R'(x) S(x) f(x)),
never from solving a linear system.  Two presentations are produced:

* :class:`ReferenceRule` - nodes in [-1, 1] per interval of the period,
  the coordinates in which the formulas are stated;
* :class:`ScaledRule` - interval k mapped to [k, k+1] with weights
  halved, the presentation used by the reference tables, file output and
  the exactness checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .families import (
    FACTOR_C1_ENDPOINT,
    FACTOR_C1_EVEN,
    FACTOR_ONE,
    Family,
    FamilySpec,
)
from .gegenbauer import eval_combo
from .rootfind import isolate_and_refine


class DegenerateWeight(Exception):
    """A weight denominator vanished; impossible for a valid family spec."""


# The S polynomials cancel strongly near x = +-1 (at a root of R they are
# proportional to 1 - x^2 times a large Gegenbauer value), which costs the
# plain double evaluation up to four digits for n beyond ~35.  The weight
# denominators are therefore always evaluated in mpmath at this precision;
# root isolation stays in doubles.
_WEIGHT_DPS = 25


def _divide(a, denom):
    """a / denom where a may be an exact Fraction and denom a float or mpf."""
    if isinstance(a, Fraction):
        return a.numerator / (a.denominator * denom)
    return a / denom


@dataclass(frozen=True)
class RuleInterval:
    nodes: tuple
    weights: tuple


@dataclass(frozen=True)
class ReferenceRule:
    family: Family
    n: int
    degree: int
    intervals: tuple
    delta: object = 0


@dataclass(frozen=True)
class ScaledRule:
    family: Family
    n: int
    degree: int
    intervals: tuple
    delta: object = 0

    @property
    def period_intervals(self) -> int:
        return len(self.intervals)


_EXTRA_FACTORS = {
    FACTOR_ONE: lambda x: 1,
    FACTOR_C1_ENDPOINT: lambda x: (1 - x * x) ** 2,
    FACTOR_C1_EVEN: lambda x: (1 + x) * (1 - x) ** 2,
}


def assemble(spec: FamilySpec, extended: bool = False) -> ReferenceRule:
    """Compute nodes and weights for every interval of the spec's period.

    Fixed endpoint nodes keep their closed-form weights and are listed
    first (they sit at the interval's left end).  For the reflected
    second interval of the C1 even family, the first interval's free
    nodes are negated and re-sorted with their weights carried along.
    """
    intervals = []
    first_free = None  # (nodes, weights) of the first interval's free part
    for iv in spec.intervals:
        nodes, weights = [], []
        if iv.fixed_node is not None:
            nodes.append(iv.fixed_node[0])
            weights.append(iv.fixed_node[1])
        if iv.expected_free_nodes > 0:
            extra = _EXTRA_FACTORS[iv.extra_weight_factor]
            rootset = isolate_and_refine(
                iv.r, -1, 1, iv.expected_free_nodes, extended=extended,
            )
            for x in rootset.roots:
                if extended:
                    _, rder = eval_combo(iv.r, x)
                    sval, _ = eval_combo(iv.s, x)
                    denom = rder * sval * extra(x)
                    weight = _divide(iv.a, denom) if denom != 0 else None
                else:
                    # A couple of Newton steps at higher precision: the
                    # double root is good to ~1e-13 near +-1, which the
                    # weight sensitivity there would amplify past 1e-12.
                    with mpmath.workdps(_WEIGHT_DPS):
                        xm = mpmath.mpf(float(x))
                        rder = None
                        for _ in range(2):
                            rval, rder = eval_combo(iv.r, xm)
                            if rder == 0:
                                break
                            xm = xm - rval / rder
                        sval, _ = eval_combo(iv.s, xm)
                        denom = rder * sval * extra(xm) if rder else 0
                        weight = float(_divide(iv.a, denom)) if denom != 0 else None
                        x = float(xm)
                if weight is None or abs(denom) <= 1e-300:
                    raise DegenerateWeight(
                        f"{spec.id.name} n={spec.n}: denominator ~ 0 at x={x}"
                    )
                nodes.append(x if extended else float(x))
                weights.append(weight)
            if first_free is None:
                first_free = (nodes[-iv.expected_free_nodes:],
                              weights[-iv.expected_free_nodes:])
        elif first_free is None:
            first_free = ([], [])
        intervals.append(RuleInterval(tuple(nodes), tuple(weights)))
    if spec.second_interval_by_reflection:
        pairs = sorted((-x, w) for x, w in zip(*first_free))
        intervals.append(RuleInterval(
            tuple(x for x, _ in pairs), tuple(w for _, w in pairs)))
    return ReferenceRule(
        family=spec.id, n=spec.n, degree=spec.degree,
        intervals=tuple(intervals), delta=spec.delta,
    )


def scale_to_unit_intervals(rule: ReferenceRule) -> ScaledRule:
    """Map interval k from [-1, 1] to [k, k+1]; weights scale by 1/2."""
    scaled = []
    for k, iv in enumerate(rule.intervals):
        scaled.append(RuleInterval(
            tuple(k + (x + 1) / 2 for x in iv.nodes),
            tuple(w / 2 for w in iv.weights),
        ))
    return ScaledRule(
        family=rule.family, n=rule.n, degree=rule.degree,
        intervals=tuple(scaled), delta=rule.delta,
    )


def replicate_periodically(rule: ScaledRule, copies: int):
    """Tile the scaled rule over `copies` periods; returns sorted (node, weight) pairs."""
    if copies < 1:
        raise ValueError("copies must be >= 1")
    period = rule.period_intervals
    out = []
    for j in range(copies):
        shift = j * period
        for iv in rule.intervals:
            out.extend((x + shift, w) for x, w in zip(iv.nodes, iv.weights))
    out.sort(key=lambda pair: pair[0])
    return out
