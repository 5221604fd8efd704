"""Alexander duality and symbolic powers for square-free monomial ideals.

The dual of a square-free ideal is generated by the minimal transversals of
its generator supports; those same transversals are the supports of the
minimal primes, so both operations share one enumeration.  Symbolic powers
are computed exactly as the intersection of minimal-prime powers, folded one
prime at a time.

The bounded Simis check compares I^(s) with I^s for s = 2..s_max.  Since
I^s is always contained in I^(s), equality at s holds iff every minimal
generator of the symbolic power passes the ordinary-power membership test;
that avoids ever expanding I^s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .ideals import (
    DEFAULT_GEN_CAP,
    MonomialIdeal,
    Monomial,
    SizeLimitError,
    from_masks,
    member_power,
    minimal_transversals,
    minimalize,
    monomial_str,
    power,
)


def _require_square_free_proper(a: MonomialIdeal, what: str):
    if a.is_zero:
        raise ValueError(f"{what} needs a nonzero ideal")
    if a.is_unit:
        raise ValueError(f"{what} needs a proper ideal")
    if not a.is_square_free:
        raise ValueError(f"{what} needs a square-free ideal")


def alexander_dual(a: MonomialIdeal) -> MonomialIdeal:
    """Square-free dual: generators <-> minimal vertex covers of the supports."""
    _require_square_free_proper(a, "alexander_dual")
    return from_masks(a.n, minimal_transversals(a.support_masks(), a.n))


def minimal_primes(a: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Supports of the minimal primes, as sorted 1-based variable tuples."""
    _require_square_free_proper(a, "minimal_primes")
    masks = minimal_transversals(a.support_masks(), a.n)
    return tuple(tuple(i + 1 for i in range(a.n) if m >> i & 1) for m in masks)


def prime_power_weight(m: Monomial, prime_vars: Sequence[int]) -> int:
    """Total exponent of m on the variables of one minimal prime."""
    return sum(m[v - 1] for v in prime_vars)


def in_symbolic_shortcut(m: Monomial, primes: Sequence[Sequence[int]], s: int) -> bool:
    """Membership in I^(s) via per-prime exponent sums (no intersection built)."""
    return all(prime_power_weight(m, p) >= s for p in primes)


def _compositions(total: int, k: int):
    # all k-tuples of nonnegative ints summing to `total`
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _prime_power_gens(n: int, prime_vars: Sequence[int], s: int) -> list[Monomial]:
    gens = []
    for comp in _compositions(s, len(prime_vars)):
        m = [0] * n
        for v, e in zip(prime_vars, comp):
            m[v - 1] = e
        gens.append(tuple(m))
    return gens


def symbolic_power(a: MonomialIdeal, s: int, cap: int = DEFAULT_GEN_CAP) -> MonomialIdeal:
    """I^(s) = intersection of s-th powers of the minimal primes of I."""
    _require_square_free_proper(a, "symbolic_power")
    if s < 1:
        raise ValueError("symbolic_power needs s >= 1")
    if s == 1:
        return a
    # complete-intersection fast paths: symbolic and ordinary powers agree
    if all(sum(g) == 1 for g in a.gens) or len(a.gens) == 1:
        return power(a, s, cap=cap)
    primes = sorted(minimal_primes(a), key=lambda p: (len(p), p))
    current = _prime_power_gens(a.n, primes[0], s)
    for p in primes[1:]:
        cands: list[Monomial] = []
        plen = len(p)
        idx = [v - 1 for v in p]
        for g in current:
            w = 0
            for i in idx:
                w += g[i]
            if w >= s:
                cands.append(g)
            else:
                need = s - w
                for comp in _compositions(need, plen):
                    gg = list(g)
                    for i, e in zip(idx, comp):
                        gg[i] += e
                    cands.append(tuple(gg))
        if len(cands) > cap:
            raise SizeLimitError(
                f"symbolic power intermediate size {len(cands)} exceeds cap {cap}")
        current = list(minimalize(a.n, cands).gens)
    return minimalize(a.n, current)


@dataclass(frozen=True)
class SimisReport:
    """Outcome of the bounded symbolic-vs-ordinary power comparison."""
    n: int
    s_max: int
    verdict: str                      # "equal_up_to" or "witness_at"
    s: Optional[int] = None
    witness: Optional[Monomial] = None

    def to_json(self) -> dict:
        return {
            "s_max": self.s_max,
            "verdict": self.verdict,
            "s": self.s,
            "witness": monomial_str(self.witness) if self.witness is not None else None,
        }


def simis_check(a: MonomialIdeal, s_max: int, cap: int = DEFAULT_GEN_CAP) -> SimisReport:
    """Compare I^(s) with I^s for s = 2..s_max; stop at the first inequality.

    The witness, when present, is the first minimal generator of I^(s) in
    canonical order that fails membership in I^s.
    """
    _require_square_free_proper(a, "simis_check")
    if s_max < 1:
        raise ValueError("simis_check needs s_max >= 1")
    if all(sum(g) == 1 for g in a.gens) or len(a.gens) == 1:
        # complete intersections are Simis at every s
        return SimisReport(a.n, s_max, "equal_up_to")
    for s in range(2, s_max + 1):
        sym = symbolic_power(a, s, cap=cap)
        for g in sym.gens:
            if not member_power(g, a, s):
                return SimisReport(a.n, s_max, "witness_at", s, g)
    return SimisReport(a.n, s_max, "equal_up_to")
