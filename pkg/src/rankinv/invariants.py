"""Galois sum/intersection invariants of rank-metric codes.

For a code C of dimension k and a Galois automorphism sigma (a -> a^(q^r)):

    S_i = C + sigma(C) + ... + sigma^i(C)        s_i = dim S_i
    T_i = C n sigma(C) n ... n sigma^i(C)        t_i = dim T_i
    Delta_i = s_{i+1} - s_i                      Lambda_i = t_i - t_{i+1}

Both sequences stabilize as soon as two consecutive values agree; s by step
n-k at the latest and t by step k.  Intersections are computed through duals
(the dual of a sum of duals), matching the duality t_i(C) = n - s_i(dual C);
a direct pairwise-intersection path exists for cross-checking.

Fingerprints package these dimensions into equivalence-invariant keys:

* consecutive:     for every Galois exponent r in 0..m-1, the fixed-length
                   rows (s_1..s_{n-k}) and (t_1..t_k); the key is the sorted
                   multiset of those pairs, and the exponent-indexed map is
                   kept for diagnostics/witnesses.
* random triples:  dimensions (dim sum, dim intersection) of sigma_1(C),
                   sigma_2(C), sigma_3(C) over seeded random distinct
                   exponent triples; the key is the sorted list of pairs.

Per-exponent (and per-trial) comparison between two codes is also sound
because the full automorphism group is abelian and equivalence matrices have
entries fixed by every Galois automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import codes as cd
from . import linalg as la
from .gf import GaloisAut
from .rng import DetRNG


def sum_code(code: cd.LinearCode, auts) -> cd.LinearCode:
    """The code sum(aut(C) for aut in auts)."""
    rows = []
    for aut in auts:
        rows.extend(aut.on_vector(r) for r in code.gen)
    return cd.LinearCode.from_rows(code.field, rows, code.n)


def intersect_code(code: cd.LinearCode, auts) -> cd.LinearCode:
    """The code intersect(aut(C) for aut in auts), via duals."""
    dual_sum = sum_code(cd.dual(code), auts)
    return cd.dual(dual_sum)


def _sigma(code: cd.LinearCode, sigma_exp: int) -> GaloisAut:
    return GaloisAut(code.field, sigma_exp)


def s_sequence(code: cd.LinearCode, sigma_exp: int, i_max: int | None = None,
               method: str = "fast") -> list[int]:
    """[s_0, s_1, ...]: fixed length i_max+1 when i_max is given, otherwise
    up to and including the first repeated value."""
    if method == "fast":
        return _s_fast(code, sigma_exp, i_max)
    if method == "naive":
        return _s_naive(code, sigma_exp, i_max)
    raise ValueError(f"unknown method {method!r}")


def _stop_bound(code: cd.LinearCode) -> int:
    # s stabilizes by index n-k, t by index k; +1 captures the repeat
    return max(code.n - code.k, code.k) + 1


def _s_fast(code: cd.LinearCode, sigma_exp: int, i_max: int | None) -> list[int]:
    field = code.field
    sigma = _sigma(code, sigma_exp)
    limit = i_max if i_max is not None else code.n - code.k + 1
    inc = la.IncrementalRank(field)
    block = code.gen
    seq = []
    for i in range(limit + 1):
        for row in block:
            inc.add_row(row)
        seq.append(inc.rank)
        if i_max is None and i > 0 and seq[-1] == seq[-2]:
            return seq
        if i < limit:
            block = tuple(sigma.on_vector(r) for r in block)
    if i_max is None:
        raise AssertionError("sum sequence failed to stabilize")  # pragma: no cover
    return seq


def _s_naive(code: cd.LinearCode, sigma_exp: int, i_max: int | None) -> list[int]:
    field = code.field
    sigma = _sigma(code, sigma_exp)
    limit = i_max if i_max is not None else code.n - code.k + 1
    seq = []
    blocks = []
    block = code.gen
    for i in range(limit + 1):
        blocks.append(block)
        seq.append(la.rank(field, la.stack(*blocks)))
        if i_max is None and i > 0 and seq[-1] == seq[-2]:
            return seq
        if i < limit:
            block = tuple(sigma.on_vector(r) for r in block)
    if i_max is None:
        raise AssertionError("sum sequence failed to stabilize")  # pragma: no cover
    return seq


def t_sequence(code: cd.LinearCode, sigma_exp: int, i_max: int | None = None,
               method: str = "dual") -> list[int]:
    """[t_0, t_1, ...]; same length conventions as s_sequence."""
    if method == "dual":
        limit = i_max if i_max is not None else code.k + 1
        sd = s_sequence(cd.dual(code), sigma_exp, i_max=limit)
        seq = [code.n - v for v in sd]
        if i_max is not None:
            return seq
        out = [seq[0]]
        for v in seq[1:]:
            out.append(v)
            if out[-1] == out[-2]:
                return out
        raise AssertionError("intersection sequence failed to stabilize")  # pragma: no cover
    if method == "direct":
        return _t_direct(code, sigma_exp, i_max)
    raise ValueError(f"unknown method {method!r}")


def _t_direct(code: cd.LinearCode, sigma_exp: int, i_max: int | None) -> list[int]:
    field = code.field
    sigma = _sigma(code, sigma_exp)
    limit = i_max if i_max is not None else code.k + 1
    seq = [code.k]
    cur = code.gen
    block = code.gen
    for i in range(1, limit + 1):
        block = tuple(sigma.on_vector(r) for r in block)
        cur = la.row_space_intersection(field, cur, block, code.n)
        seq.append(len(cur))
        if i_max is None and seq[-1] == seq[-2]:
            return seq
    if i_max is None:
        raise AssertionError("intersection sequence failed to stabilize")  # pragma: no cover
    return seq


@dataclass(frozen=True)
class InvariantProfile:
    """Fixed-length dimension data of one (code, sigma) pair."""

    sigma: int
    s: tuple[int, ...]       # s_0 .. s_{n-k}
    t: tuple[int, ...]       # t_0 .. t_k
    delta: tuple[int, ...]   # Delta_0 .. Delta_{n-k}   (Delta_{n-k} = 0)
    lam: tuple[int, ...]     # Lambda_0 .. Lambda_k     (Lambda_k = 0)

    @property
    def key(self):
        return (self.s[1:], self.t[1:])


def invariant_profile(code: cd.LinearCode, sigma_exp: int) -> InvariantProfile:
    n, k = code.n, code.k
    s = s_sequence(code, sigma_exp, i_max=n - k + 1)
    t = t_sequence(code, sigma_exp, i_max=k + 1)
    delta = tuple(s[i + 1] - s[i] for i in range(n - k + 1))
    lam = tuple(t[i] - t[i + 1] for i in range(k + 1))
    return InvariantProfile(
        sigma=sigma_exp % code.field.m,
        s=tuple(s[: n - k + 1]),
        t=tuple(t[: k + 1]),
        delta=delta,
        lam=lam,
    )


class Fingerprint:
    """Equivalence-invariant key plus its per-exponent / per-trial detail.

    Equality and hashing use only (mode, key): the key is the sorted multiset
    the comparison contract is defined on, while detail keeps the
    exponent-indexed profiles (or trial-indexed dimension pairs) for witness
    extraction."""

    __slots__ = ("mode", "key", "detail")

    def __init__(self, mode: str, key: tuple, detail: tuple):
        self.mode = mode
        self.key = key
        self.detail = detail

    def __eq__(self, other):
        return (isinstance(other, Fingerprint)
                and self.mode == other.mode and self.key == other.key)

    def __hash__(self):
        return hash((self.mode, self.key))

    def __repr__(self):
        return f"Fingerprint(mode={self.mode!r}, key={self.key!r})"


def fingerprint_consecutive(code: cd.LinearCode) -> Fingerprint:
    """Sorted multiset of (s-row, t-row) over all m Galois exponents."""
    profiles = tuple(invariant_profile(code, r) for r in range(code.field.m))
    key = tuple(sorted(p.key for p in profiles))
    return Fingerprint("consecutive", key, profiles)


def random_triples(m: int, trials: int, seed: int) -> list[tuple[int, int, int]]:
    """The seeded exponent triples shared by every code in a comparison."""
    if m < 3:
        raise ValueError("need m >= 3 for distinct triples")
    out = []
    for idx in range(trials):
        rng = DetRNG(seed, f"census-triples/{idx}")
        out.append(tuple(rng.sample_distinct(3, m)))
    return out


def fingerprint_random_triples(code: cd.LinearCode, trials: int = 100, seed: int = 0) -> Fingerprint:
    """Sorted (dim sum, dim intersection) pairs over seeded sigma-triples."""
    field = code.field
    pairs = []
    for triple in random_triples(field.m, trials, seed):
        auts = [GaloisAut(field, r) for r in triple]
        a = sum_code(code, auts).k
        b = intersect_code(code, auts).k
        pairs.append((a, b))
    return Fingerprint("random_triples", tuple(sorted(pairs)), tuple(pairs))


def fingerprint(code: cd.LinearCode, mode: str = "consecutive",
                trials: int = 100, seed: int = 0) -> Fingerprint:
    if mode == "consecutive":
        return fingerprint_consecutive(code)
    if mode == "random_triples":
        return fingerprint_random_triples(code, trials=trials, seed=seed)
    raise ValueError(f"unknown fingerprint mode {mode!r}")
