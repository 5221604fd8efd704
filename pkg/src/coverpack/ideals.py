"""Monomial ideals in Z[x_1..x_n] with exact generator arithmetic.

A monomial is an exponent tuple of length n (index i <-> variable x_{i+1});
an ideal is its canonical minimal generating set, kept sorted by
(total degree, exponent tuple).  Square-free monomials double as support
bitmasks, which the combinatorial layers use directly.

Divisibility tests in the minimalisation loop use a packed-integer
comparison (16 bits per exponent), so exponents must stay below 2^15;
every workload here is far below that.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

Monomial = tuple  # exponent tuple of length n

DEFAULT_GEN_CAP = 200_000

_FIELD = 16
_FMAX = (1 << (_FIELD - 1)) - 1


class SizeLimitError(RuntimeError):
    """An intermediate generating set outgrew the configured cap."""


@lru_cache(maxsize=64)
def _high_mask(n: int) -> int:
    h = 0
    for i in range(n):
        h |= 1 << (_FIELD * i + _FIELD - 1)
    return h


def pack(m: Monomial) -> int:
    """Pack an exponent tuple into one integer, 16 bits per variable."""
    acc = 0
    for i, e in enumerate(m):
        if e > _FMAX:
            raise OverflowError(f"exponent {e} exceeds packed-field capacity")
        acc |= e << (_FIELD * i)
    return acc


def divides_packed(a: int, b: int, high: int) -> bool:
    """Componentwise a <= b for packed exponent vectors (no per-field borrow)."""
    return ((b | high) - a) & high == high


def degree(m: Monomial) -> int:
    return sum(m)


def support_mask(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def is_square_free_monomial(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def mask_to_monomial(mask: int, n: int) -> Monomial:
    return tuple(1 if mask >> i & 1 else 0 for i in range(n))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_str(m: Monomial) -> str:
    """Render like "x1^2*x4"; the empty monomial renders as "1"."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of monomial_str for variables x1..xn."""
    text = text.strip()
    exps = [0] * n
    if text in ("1", ""):
        return tuple(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        if "^" in factor:
            var, _, p = factor.partition("^")
            e = int(p)
        else:
            var, e = factor, 1
        if not var.startswith("x"):
            raise ValueError(f"bad factor {factor!r}")
        idx = int(var[1:])
        if not (1 <= idx <= n):
            raise ValueError(f"variable {var} out of range for n={n}")
        exps[idx - 1] += e
    return tuple(exps)


class MonomialIdeal:
    """Canonically minimally generated monomial ideal; () means the zero ideal."""

    __slots__ = ("n", "gens", "_masks")

    def __init__(self, n: int, gens: Sequence[Monomial], _trusted: bool = False):
        self.n = n
        if _trusted:
            self.gens = tuple(gens)
        else:
            self.gens = _minimalize_list(n, gens)
        self._masks: Optional[tuple[int, ...]] = None

    # -- basic predicates ---------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and sum(self.gens[0]) == 0

    @property
    def is_square_free(self) -> bool:
        return all(is_square_free_monomial(g) for g in self.gens)

    def support_masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(support_mask(g) for g in self.gens)
        return self._masks

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.n == other.n and self.gens == other.gens)

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"<ideal in {self.n} vars: {', '.join(monomial_str(g) for g in self.gens) or '0'}>"

    def to_json(self) -> list[str]:
        return [monomial_str(g) for g in self.gens]

    @classmethod
    def from_json(cls, n: int, gens: Iterable[str]) -> "MonomialIdeal":
        return minimalize(n, [parse_monomial(s, n) for s in gens])


def _sort_key(m: Monomial):
    return (sum(m), m)


def _minimalize_list(n: int, cands: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(cands), key=_sort_key)
    if not uniq:
        return ()
    high = _high_mask(n)
    accepted: list[Monomial] = []
    accepted_packed: list[int] = []
    for m in uniq:
        pm = pack(m)
        # only earlier (lower-degree-or-equal) accepted gens can divide m
        for ap in accepted_packed:
            if divides_packed(ap, pm, high):
                break
        else:
            accepted.append(m)
            accepted_packed.append(pm)
    return tuple(accepted)


def minimalize(n: int, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Ideal generated by the given monomials, reduced to minimal generators."""
    gens = _minimalize_list(n, monomials)
    for g in gens:
        if len(g) != n:
            raise ValueError(f"monomial {g} has length {len(g)}, universe is {n}")
    return MonomialIdeal(n, gens, _trusted=True)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (), _trusted=True)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,), _trusted=True)


def from_masks(n: int, masks: Iterable[int]) -> MonomialIdeal:
    """Square-free ideal from support bitmasks (minimalised)."""
    return minimalize(n, [mask_to_monomial(m, n) for m in masks])


def _check_same_universe(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise ValueError(f"universe mismatch: {a.n} vs {b.n}")


def product(a: MonomialIdeal, b: MonomialIdeal, cap: int = DEFAULT_GEN_CAP) -> MonomialIdeal:
    """Ideal product AB."""
    _check_same_universe(a, b)
    if a.is_zero or b.is_zero:
        return zero_ideal(a.n)
    if len(a.gens) * len(b.gens) > cap:
        raise SizeLimitError(f"product candidate count {len(a.gens) * len(b.gens)} exceeds cap {cap}")
    cands = [mul(g, h) for g in a.gens for h in b.gens]
    return minimalize(a.n, cands)


def power(a: MonomialIdeal, s: int, cap: int = DEFAULT_GEN_CAP) -> MonomialIdeal:
    """Ordinary power A^s by repeated products; A^0 is the unit ideal."""
    if s < 0:
        raise ValueError("power needs s >= 0")
    if s == 0:
        return unit_ideal(a.n)
    acc = a
    for _ in range(s - 1):
        acc = product(acc, a, cap=cap)
    return acc


def intersect(a: MonomialIdeal, b: MonomialIdeal, cap: int = DEFAULT_GEN_CAP) -> MonomialIdeal:
    """Ideal intersection via pairwise lcms."""
    _check_same_universe(a, b)
    if a.is_zero or b.is_zero:
        return zero_ideal(a.n)
    if len(a.gens) * len(b.gens) > cap:
        raise SizeLimitError(f"intersection candidate count {len(a.gens) * len(b.gens)} exceeds cap {cap}")
    cands = [lcm(g, h) for g in a.gens for h in b.gens]
    return minimalize(a.n, cands)


def member(m: Monomial, a: MonomialIdeal) -> bool:
    """Whether the monomial lies in the ideal (some generator divides it)."""
    if len(m) != a.n:
        raise ValueError(f"monomial length {len(m)} does not match universe {a.n}")
    high = _high_mask(a.n)
    pm = pack(m)
    return any(divides_packed(pack(g), pm, high) for g in a.gens)


def member_power(m: Monomial, a: MonomialIdeal, s: int) -> bool:
    """Whether m lies in A^s, without expanding A^s.

    Searches for s generators (with repetition) whose product divides m,
    choosing factors in descending degree with memoisation on the quotient.
    """
    if len(m) != a.n:
        raise ValueError(f"monomial length {len(m)} does not match universe {a.n}")
    if s < 0:
        raise ValueError("member_power needs s >= 0")
    if s == 0:
        return True
    if a.is_zero:
        return False
    if a.is_unit:
        return True
    gens = sorted(a.gens, key=lambda g: (-sum(g), g))
    degs = [sum(g) for g in gens]
    min_deg = degs[-1]
    memo: dict[tuple, bool] = {}

    def rec(q: Monomial, k: int, qdeg: int) -> bool:
        if k == 0:
            return True
        if qdeg < k * min_deg:
            return False
        key = (q, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        ok = False
        for g, d in zip(gens, degs):
            if d > qdeg:
                continue
            if divides(g, q):
                if rec(tuple(x - y for x, y in zip(q, g)), k - 1, qdeg - d):
                    ok = True
                    break
        memo[key] = ok
        return ok

    return rec(m, s, sum(m))


# ---------------------------------------------------------------------------
# height (= codimension) of a square-free ideal

def _greedy_cover(edge_masks: Sequence[int], n: int) -> int:
    uncovered = list(edge_masks)
    size = 0
    while uncovered:
        counts = [0] * n
        for e in uncovered:
            m = e
            while m:
                low = m & -m
                counts[low.bit_length() - 1] += 1
                m ^= low
        v = max(range(n), key=lambda i: counts[i])
        bit = 1 << v
        uncovered = [e for e in uncovered if not e & bit]
        size += 1
    return size


def min_cover_masks(edge_masks: Sequence[int], n: int) -> int:
    """Minimum number of variables meeting every support mask (exact B&B)."""
    edges = [e for e in edge_masks if e]
    if len(edges) != len(edge_masks):
        raise ValueError("empty support present (unit generator)")
    if not edges:
        return 0
    best = _greedy_cover(edges, n)

    def lower_bound(uncovered: list[int]) -> int:
        # greedy disjoint supports give a matching-style bound
        used = 0
        lb = 0
        for e in uncovered:
            if not e & used:
                used |= e
                lb += 1
        return lb

    def bb(uncovered: list[int], chosen: int):
        nonlocal best
        if not uncovered:
            if chosen < best:
                best = chosen
            return
        if chosen + lower_bound(uncovered) >= best:
            return
        counts: dict[int, int] = {}
        for e in uncovered:
            m = e
            while m:
                low = m & -m
                counts[low] = counts.get(low, 0) + 1
                m ^= low
        hot = max(counts, key=lambda b: counts[b])
        branch_edge = next(e for e in uncovered if e & hot)
        vs = []
        m = branch_edge
        while m:
            low = m & -m
            vs.append(low)
            m ^= low
        vs.sort(key=lambda b: -counts.get(b, 0))
        for bit in vs:
            bb([e for e in uncovered if not e & bit], chosen + 1)

    bb(edges, 0)
    return best


def height(a: MonomialIdeal) -> int:
    """Height of a proper nonzero square-free monomial ideal."""
    if a.is_zero:
        raise ValueError("height of the zero ideal is undefined here")
    if a.is_unit:
        raise ValueError("height needs a proper ideal")
    if not a.is_square_free:
        raise ValueError("height implemented for square-free ideals only")
    return min_cover_masks(a.support_masks(), a.n)


def equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Ideal equality via canonical generator comparison."""
    _check_same_universe(a, b)
    return a.gens == b.gens


# ---------------------------------------------------------------------------
# minimal transversals of a set system (used by duality and brute-force covers)

def minimal_transversals(edge_masks: Sequence[int], n: int) -> list[int]:
    """Inclusion-minimal hitting sets of the given nonempty supports, as masks.

    Recursive branching on the first uncovered support; earlier branch
    vertices are excluded downstream, and a final antichain filter removes
    the non-minimal leftovers.
    """
    edges = sorted(set(edge_masks), key=lambda e: (bin(e).count("1"), e))
    if any(e == 0 for e in edges):
        raise ValueError("empty support has no transversal")
    found: set[int] = set()

    def rec(chosen: int, remaining: tuple[int, ...], excluded: int):
        if not remaining:
            found.add(chosen)
            return
        e = remaining[0]
        branchable = e & ~excluded
        seen = 0
        m = branchable
        while m:
            low = m & -m
            m ^= low
            rec(chosen | low,
                tuple(f for f in remaining if not f & low),
                excluded | seen)
            seen |= low
        # branches where e is hit only by an excluded vertex die here: those
        # transversals are produced by the branch that excluded the vertex

    rec(0, tuple(edges), 0)
    # antichain filter
    out = sorted(found, key=lambda t: (bin(t).count("1"), t))
    minimal: list[int] = []
    for t in out:
        if not any(t & s == s for s in minimal):
            minimal.append(t)
    return minimal


def brute_minimal_transversals(edge_masks: Sequence[int], n: int) -> list[int]:
    """Oracle: scan all 2^n subsets by ascending popcount, keep minimal hitters."""
    hits: list[int] = []
    subsets = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))
    for s in subsets:
        if all(s & e for e in edge_masks):
            if not any(s & t == t for t in hits):
                hits.append(s)
    return hits
