"""Linear rank-metric codes over F_{q^m} and their standard constructions.

A LinearCode is an F_{q^m}-subspace of F_{q^m}^n stored by its canonical
(RREF) generator matrix, so two codes are equal iff their stored generators
are equal.  CodeSpec describes a member of one of five parametric families:

* Gabidulin              rows theta^j(g), j = 0..k-1
* Twisted                rows g + eta*theta^k(g), theta(g), ..., theta^(k-1)(g)
* GeneralizedTwisted     k rows theta^j(g) of which the rows j in h are
                         replaced by theta^(h_i)(g) + eta_i*theta^(k-1+t_i)(g)
* NewGabI  (m-k > k)     rows theta^i(g) + theta^i(eta)*theta^(k+i)(g), i < k
* NewGabII (m-k <= k)    the same rows for i < m-k, plus theta^i(g) for
                         m-k <= i < k

with g of full F_q-rank n and theta a generating Galois automorphism.  For
the GeneralizedTwisted family the twist offsets t_i must either all lie in
[1, n-k] or all lie in [m-n+1, m-k]; mixed ranges are rejected.  In every
family the construction is checked to produce dimension exactly k.

The classical multiplicative constraint on a Twisted code's eta
(norm(eta) != (-1)^(k*m), which guarantees the maximum rank distance) is
*advisory* here: build() records it via norm_condition_ok() and only enforces
it under strict_norm=True, because perfectly well-defined codes—including the
reference vectors shipped with the acceptance suite—violate it over F_2,
where no eta satisfies the constraint at all.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from . import linalg as la
from .gf import FieldTower, FullAut, GaloisAut, field_from_dict, field_to_dict

FAMILIES = ("Gabidulin", "Twisted", "GeneralizedTwisted", "NewGabI", "NewGabII")


class BuildError(ValueError):
    """A CodeSpec violates a construction precondition."""


class BudgetExceeded(RuntimeError):
    """An exact enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class LinearCode:
    """F_{q^m}-linear code given by its canonical RREF generator matrix."""

    field: FieldTower
    n: int
    k: int
    gen: la.Matrix

    @classmethod
    def from_rows(cls, field: FieldTower, rows, n: int | None = None) -> "LinearCode":
        rows = la.mat(field, rows)
        if n is None:
            if not rows:
                raise ValueError("cannot infer the length of a zero code")
            n = len(rows[0])
        R, _ = la.rref(field, rows)
        return cls(field, n, len(R), R)

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError("invalid code dimension")

    def contains(self, v) -> bool:
        inc = la.IncrementalRank(self.field)
        for row in self.gen:
            inc.add_row(row)
        return not inc.add_row(v)

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, q^m={self.field.q}^{self.field.m})"


def code_equal(c1: LinearCode, c2: LinearCode) -> bool:
    return c1.field == c2.field and c1.n == c2.n and c1.gen == c2.gen


def dual(code: LinearCode) -> LinearCode:
    """Dual with respect to the standard bilinear form sum(u_i v_i)."""
    gen = la.nullspace(code.field, code.gen, code.n)
    return LinearCode(code.field, code.n, code.n - code.k, gen)


# --------------------------------------------------------------------------
# family specifications
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CodeSpec:
    family: str
    n: int
    k: int
    theta_exp: int = 1
    g: tuple[int, ...] = ()
    eta: Optional[tuple[int, ...]] = None  # length ell for GeneralizedTwisted, else length 1
    t: Optional[tuple[int, ...]] = None
    h: Optional[tuple[int, ...]] = None

    @property
    def ell(self) -> int:
        return len(self.eta) if self.eta else 0


def _as_tuple(x) -> Optional[tuple[int, ...]]:
    if x is None:
        return None
    if isinstance(x, int):
        return (x,)
    return tuple(int(v) for v in x)


def make_spec(family: str, n: int, k: int, theta_exp: int = 1, g=(), eta=None, t=None, h=None) -> CodeSpec:
    return CodeSpec(family, n, k, theta_exp, tuple(int(a) for a in g),
                    _as_tuple(eta), _as_tuple(t), _as_tuple(h))


def norm_condition_ok(field: FieldTower, k: int, eta: int) -> bool:
    """norm(eta) != (-1)^(k*m), the classical requirement for a Twisted code
    to have maximum rank distance."""
    target = field.one if (k * field.m) % 2 == 0 else field.neg(field.one)
    return field.norm_q(eta) != target


def _validate_common(field: FieldTower, spec: CodeSpec) -> GaloisAut:
    if spec.family not in FAMILIES:
        raise BuildError(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    n, k, m = spec.n, spec.k, field.m
    if not 1 <= n <= m:
        raise BuildError(f"need 1 <= n <= m (got n={n}, m={m})")
    if not 1 <= k <= n:
        raise BuildError(f"need 1 <= k <= n (got k={k}, n={n})")
    if math.gcd(spec.theta_exp, m) != 1:
        raise BuildError(f"theta exponent {spec.theta_exp} does not generate the Galois group (m={m})")
    if len(spec.g) != n:
        raise BuildError(f"g must have length n={n}")
    if la.rank_q(field, spec.g) < n:
        raise BuildError("g must have full F_q-rank n")
    return GaloisAut(field, spec.theta_exp)


def build(field: FieldTower, spec: CodeSpec, strict_norm: bool = False) -> LinearCode:
    theta = _validate_common(field, spec)
    n, k, m = spec.n, spec.k, field.m
    g = tuple(field.check(a) for a in spec.g)

    if spec.family == "Gabidulin":
        rows = la.moore_matrix(field, g, k, theta)

    elif spec.family == "Twisted":
        if spec.eta is None or len(spec.eta) != 1:
            raise BuildError("Twisted requires a single eta")
        eta = field.check(spec.eta[0])
        if k > n - 1:
            raise BuildError("Twisted requires k <= n-1")
        if strict_norm and not norm_condition_ok(field, k, eta):
            raise BuildError("norm(eta) == (-1)^(k*m); the twisted code is not MRD "
                             "(build with strict_norm=False to construct it anyway)")
        moore = la.moore_matrix(field, g, k + 1, theta)
        first = la.add_vec(field, moore[0], la.scale_vec(field, eta, moore[k]))
        rows = (first,) + moore[1:k]

    elif spec.family == "GeneralizedTwisted":
        rows = _gtw_rows(field, spec, theta)

    elif spec.family in ("NewGabI", "NewGabII"):
        rows = _newgab_rows(field, spec, theta)

    code = LinearCode.from_rows(field, rows, n)
    if code.k != k:
        raise BuildError(
            f"internal: construction degenerated to dimension {code.k} != k={k}"
        )
    return code


def _gtw_rows(field: FieldTower, spec: CodeSpec, theta: GaloisAut) -> la.Matrix:
    n, k, m = spec.n, spec.k, field.m
    if spec.eta is None or spec.t is None or spec.h is None:
        raise BuildError("GeneralizedTwisted requires eta, t and h tuples")
    eta, t, h = spec.eta, spec.t, spec.h
    ell = len(eta)
    if not (len(t) == len(h) == ell >= 1):
        raise BuildError("eta, t, h must have equal length >= 1")
    if len(set(h)) != ell or any(not 0 <= hi <= k - 1 for hi in h):
        raise BuildError("h entries must be distinct in [0, k-1]")
    if len(set(t)) != ell:
        raise BuildError("t entries must be distinct")
    low = all(1 <= ti <= n - k for ti in t)
    high = all(m - n + 1 <= ti <= m - k for ti in t)
    if not (low or high):
        raise BuildError(
            f"t entries must all lie in [1, {n - k}] or all in [{m - n + 1}, {m - k}] "
            "(mixed ranges are not part of the family)"
        )
    powers = {}
    cur = tuple(spec.g)
    for j in range(m):
        powers[j] = cur
        cur = theta.on_vector(cur)
    rows = []
    h_to_i = {hi: i for i, hi in enumerate(h)}
    for j in range(k):
        if j in h_to_i:
            i = h_to_i[j]
            twist_exp = (k - 1 + t[i]) % m
            rows.append(la.add_vec(field, powers[j],
                                   la.scale_vec(field, field.check(eta[i]), powers[twist_exp])))
        else:
            rows.append(powers[j])
    return tuple(rows)


def _newgab_rows(field: FieldTower, spec: CodeSpec, theta: GaloisAut) -> la.Matrix:
    n, k, m = spec.n, spec.k, field.m
    if spec.eta is None or len(spec.eta) != 1:
        raise BuildError(f"{spec.family} requires a single eta")
    eta = field.check(spec.eta[0])
    if spec.family == "NewGabI" and not m - k > k:
        raise BuildError("NewGabI requires m - k > k")
    if spec.family == "NewGabII" and not m - k <= k:
        raise BuildError("NewGabII requires m - k <= k")
    twisted_count = k if spec.family == "NewGabI" else m - k
    powers = {}
    cur = tuple(spec.g)
    for j in range(m):
        powers[j] = cur
        cur = theta.on_vector(cur)
    rows = []
    for i in range(k):
        if i < twisted_count:
            coef = theta.power(i)(eta)  # theta^i(eta)
            rows.append(la.add_vec(field, powers[i],
                                   la.scale_vec(field, coef, powers[(k + i) % m])))
        else:
            rows.append(powers[i])
    return tuple(rows)


# --------------------------------------------------------------------------
# closed-form duals
# --------------------------------------------------------------------------

def _dual_generator_vector(field: FieldTower, g, n: int, k: int, theta: GaloisAut):
    """The canonical dual generator: the unique (up to scalar) nonzero vector
    orthogonal to theta^j(theta^{-(n-k-1)}(g)) for j = 0..n-2."""
    shifted = theta.power(-(n - k - 1)).on_vector(g)
    M = la.moore_matrix(field, shifted, n - 1, theta)
    ker = la.nullspace(field, M, n)
    if len(ker) != 1:
        raise AssertionError("dual generator kernel is not one-dimensional")  # pragma: no cover
    gp = ker[0]
    if la.rank_q(field, gp) != n:
        raise AssertionError("dual generator does not have full F_q-rank")  # pragma: no cover
    return gp


def gabidulin_dual_params(field: FieldTower, spec: CodeSpec) -> CodeSpec:
    """Closed-form parameters of the dual of a Gabidulin code: same theta,
    dimension n-k, generator vector from _dual_generator_vector."""
    if spec.family != "Gabidulin":
        raise BuildError("gabidulin_dual_params expects a Gabidulin spec")
    theta = _validate_common(field, spec)
    n, k = spec.n, spec.k
    if not 1 <= k <= n - 1:
        raise BuildError("dual parameters need 1 <= k <= n-1")
    gp = _dual_generator_vector(field, spec.g, n, k, theta)
    return make_spec("Gabidulin", n, n - k, spec.theta_exp, gp)


def twisted_dual_params(field: FieldTower, spec: CodeSpec) -> CodeSpec:
    """Closed-form parameters of the dual of a Twisted code (2 <= k <= n-2,
    eta != 0): same theta, dimension n-k, generator vector as in the
    Gabidulin case, and

        eta' = (-1)^n * eta * theta^(k-n+1)(D)/theta^(k-n)(D)
                               * theta^(k-n)(s)/s,

    with D = det of the full n x n Moore matrix of g and
    s = <theta^(n-k)(g') ; g>."""
    if spec.family != "Twisted":
        raise BuildError("twisted_dual_params expects a Twisted spec")
    theta = _validate_common(field, spec)
    n, k = spec.n, spec.k
    if not 2 <= k <= n - 2:
        raise BuildError("dual parameters need 2 <= k <= n-2")
    if spec.eta is None or len(spec.eta) != 1 or spec.eta[0] == 0:
        raise BuildError("twisted dual parameters need a single nonzero eta")
    eta = field.check(spec.eta[0])
    g = spec.g
    gp = _dual_generator_vector(field, g, n, k, theta)
    D = la.det(field, la.moore_matrix(field, g, n, theta))
    s = la.dot(field, theta.power(n - k).on_vector(gp), g)
    if D == 0 or s == 0:
        raise AssertionError("degenerate dual data")  # pragma: no cover
    sign = field.one if n % 2 == 0 else field.neg(field.one)
    etap = field.mul(sign, eta)
    etap = field.mul(etap, field.div(theta.power(k - n + 1)(D), theta.power(k - n)(D)))
    etap = field.mul(etap, field.div(theta.power(k - n)(s), s))
    return make_spec("Twisted", n, n - k, spec.theta_exp, gp, eta=(etap,))


# --------------------------------------------------------------------------
# code maps
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SemilinearMap:
    """x -> lam * tau(x) * A with A invertible over the subfield F_q and tau
    a full automorphism; the shape of code equivalence."""

    lam: int
    A: la.Matrix
    tau: FullAut

    def apply_vector(self, field: FieldTower, v):
        w = self.tau.on_vector(v)
        w = la.vec_mat(field, w, self.A)
        if self.lam != 1:
            w = la.scale_vec(field, self.lam, w)
        return w


def apply_galois(code: LinearCode, sigma: GaloisAut) -> LinearCode:
    rows = tuple(sigma.on_vector(r) for r in code.gen)
    return LinearCode.from_rows(code.field, rows, code.n)


def apply_full_aut(code: LinearCode, tau: FullAut) -> LinearCode:
    rows = tuple(tau.on_vector(r) for r in code.gen)
    return LinearCode.from_rows(code.field, rows, code.n)


def apply_semilinear(code: LinearCode, smap: SemilinearMap) -> LinearCode:
    field = code.field
    if smap.lam == 0:
        raise ValueError("lambda must be nonzero")
    if len(smap.A) != code.n:
        raise ValueError("matrix size must equal the code length")
    for row in smap.A:
        for a in row:
            if not field.in_subfield_q(a):
                raise ValueError("A must have entries in F_q")
    if la.det(field, smap.A) == 0:
        raise ValueError("A must be invertible")
    rows = tuple(smap.apply_vector(field, r) for r in code.gen)
    return LinearCode.from_rows(field, rows, code.n)


# --------------------------------------------------------------------------
# rank-one codewords, subfield subcode, minimum distance
# --------------------------------------------------------------------------

def _subfield_kernel(code: LinearCode):
    """F_p-kernel of x -> frob_q(xG) - xG over message space coordinates;
    basis vectors give codewords with all entries in F_q."""
    field = code.field
    p, d, e = field.p, field.d, field.e
    k, n = code.k, code.n
    if k == 0:
        return []
    equations: list[list[int]] = [[0] * (k * d) for _ in range(n * d)]
    for i in range(k):
        for s in range(d):
            x = field.alpha_pow(s) if s else field.one
            col = i * d + s
            grow = code.gen[i]
            for j in range(n):
                c = field.mul(x, grow[j])
                delta = field.sub(field.frob_q(c, 1), c)
                if delta:
                    coeffs = field.coeffs(delta)
                    for dd in range(d):
                        if coeffs[dd]:
                            equations[j * d + dd][col] = coeffs[dd]
    basis = la.nullspace_p(p, equations, k * d)
    out = []
    for vec in basis:
        x = [0] * k
        for i in range(k):
            acc = 0
            for s in range(d):
                c = vec[i * d + s]
                if c:
                    term = field.alpha_pow(s) if s else field.one
                    if c != 1:
                        term = field.mul(term, c % p)
                    acc = field.add(acc, term)
            x[i] = acc
        c = la.vec_mat(field, tuple(x), code.gen)
        out.append(c)
    return out


def subfield_subcode(code: LinearCode):
    """(dimension over F_q, F_q-basis rows) of the subcode with entries in F_q."""
    field = code.field
    vecs = _subfield_kernel(code)
    if not vecs:
        return 0, ()
    R, _ = la.rref(field, vecs)
    for row in R:
        if any(not field.in_subfield_q(a) for a in row):
            raise AssertionError("subfield subcode rows left F_q")  # pragma: no cover
    return len(R), R


def has_rank_one_codeword(code: LinearCode, all_mu: bool = False):
    """(bool, witness codeword).  A nonzero codeword of F_q-rank one exists
    iff the code meets F_q^n nontrivially (scale the word by any entry's
    inverse); the default path solves exactly that linear condition.  The
    all_mu=True path instead sweeps every mu of norm 1 and solves
    theta(c) = mu*c -- the classical eigenvector formulation -- and is meant
    for cross-validation on small fields."""
    field = code.field
    if code.k == 0:
        return False, None
    if not all_mu:
        vecs = _subfield_kernel(code)
        for c in vecs:
            if any(c):
                if la.rank_q(field, c) != 1:
                    raise AssertionError("subfield word of rank != 1")  # pragma: no cover
                return True, tuple(c)
        return False, None
    # eigenvector sweep over all norm-one mu
    p, d = field.p, field.d
    k, n = code.k, code.n
    count = field.Qm1 // (field.q - 1)
    mu_gen = field.alpha_pow(field.q - 1)
    mu = field.one
    for _ in range(count):
        equations: list[list[int]] = [[0] * (k * d) for _ in range(n * d)]
        for i in range(k):
            for s in range(d):
                x = field.alpha_pow(s) if s else field.one
                col = i * d + s
                for j in range(n):
                    c = field.mul(x, code.gen[i][j])
                    delta = field.sub(field.frob_q(c, 1), field.mul(mu, c))
                    if delta:
                        coeffs = field.coeffs(delta)
                        for dd in range(d):
                            if coeffs[dd]:
                                equations[j * d + dd][col] = coeffs[dd]
        basis = la.nullspace_p(p, equations, k * d)
        for vec in basis:
            x = [0] * k
            for i in range(k):
                acc = 0
                for s in range(d):
                    cc = vec[i * d + s]
                    if cc:
                        term = field.alpha_pow(s) if s else field.one
                        if cc != 1:
                            term = field.mul(term, cc % p)
                        acc = field.add(acc, term)
                x[i] = acc
            c = la.vec_mat(field, tuple(x), code.gen)
            if any(c) and la.rank_q(field, c) == 1:
                return True, tuple(c)
        mu = field.mul(mu, mu_gen)
    return False, None


def min_distance_bruteforce(code: LinearCode, cap: int = 1 << 24) -> int:
    """Exact minimum rank distance by projective enumeration of codewords.
    Raises BudgetExceeded when (Q^k - 1)/(Q - 1) > cap."""
    field = code.field
    k, Q = code.k, field.Q
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    n_words = (Q**k - 1) // (Q - 1)
    if n_words > cap:
        raise BudgetExceeded(
            f"projective codeword count {n_words} exceeds cap {cap}"
        )
    best = code.n + 1
    gen = code.gen
    # normalized messages: first nonzero coordinate equals 1
    for lead in range(k):
        prefix = (0,) * lead + (1,)
        suffix_len = k - lead - 1
        stackv = [0] * suffix_len
        while True:
            x = prefix + tuple(stackv)
            c = la.vec_mat(field, x, gen)
            r = la.rank_q(field, c)
            if r < best:
                best = r
                if best == 1:
                    return 1
            # odometer
            pos = suffix_len - 1
            while pos >= 0:
                stackv[pos] += 1
                if stackv[pos] < Q:
                    break
                stackv[pos] = 0
                pos -= 1
            if pos < 0:
                break
    return best


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def code_to_dict(code: LinearCode, provenance: dict | None = None) -> dict:
    field = code.field
    return {
        "field": field_to_dict(field),
        "n": code.n,
        "k": code.k,
        "gen": [[list(field.coeffs(a)) for a in row] for row in code.gen],
        "provenance": provenance or {},
    }


def code_from_dict(data: dict):
    field = field_from_dict(data["field"])
    rows = tuple(
        tuple(field.from_coeffs(c) for c in row) for row in data["gen"]
    )
    code = LinearCode.from_rows(field, rows, int(data["n"]))
    if code.k != int(data["k"]):
        raise ValueError("stored dimension does not match the generator matrix")
    return code, data.get("provenance", {})


def save_code(code: LinearCode, path: str, provenance: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(code_to_dict(code, provenance), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_code(path: str):
    with open(path, encoding="utf-8") as fh:
        return code_from_dict(json.load(fh))


def spec_to_provenance(spec: CodeSpec, field: FieldTower) -> dict:
    out = {
        "family": spec.family,
        "n": spec.n,
        "k": spec.k,
        "theta_exp": spec.theta_exp,
        "g": [list(field.coeffs(a)) for a in spec.g],
    }
    if spec.eta is not None:
        out["eta"] = [list(field.coeffs(a)) for a in spec.eta]
    if spec.t is not None:
        out["t"] = list(spec.t)
    if spec.h is not None:
        out["h"] = list(spec.h)
    return out
