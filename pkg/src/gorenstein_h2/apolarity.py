"""Inverse systems: catalecticant ranks of explicit forms.

A homogeneous form ``F`` of degree ``e`` in ``y_1..y_n`` determines the
artinian Gorenstein algebra ``R/Ann(F)``; its h-vector is the list of ranks of
the catalecticant matrices of ``F``.  The pairing used here is contraction
(divided powers): the operator ``x^a`` sends ``y^c`` to ``y^(c-a)`` when
``a <= c`` and to 0 otherwise, with no multinomial factors.  Ranks therefore
stay meaningful for every prime.

Monomials of a fixed degree are indexed in graded lexicographic order
(``y_1 > y_2 > ...``), which fixes every matrix and every pivot sequence.
"""
from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from .linalg import check_prime, rank_mod_p, rank_rational
from .osequence import HVector, as_hvector

DEFAULT_PRIME = 32003
RATIONAL = 0

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponent vectors of the given degree, graded-lex descending."""
    out = []

    def rec(prefix: list, left: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for k in range(left, -1, -1):
            rec(prefix + [k], left - k, slots - 1)

    if num_vars == 0:
        return ((),) if degree == 0 else ()
    rec([], degree, num_vars)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(num_vars: int, degree: int) -> dict:
    return {m: k for k, m in enumerate(monomials(num_vars, degree))}


def _normalize(value, prime: int):
    if prime == RATIONAL:
        return Fraction(value)
    if isinstance(value, Fraction):
        if value.denominator % prime == 0:
            raise ValueError(f"coefficient {value} is undefined modulo {prime}")
        return value.numerator * pow(value.denominator, -1, prime) % prime
    return int(value) % prime


@dataclass(frozen=True)
class Form:
    """Homogeneous polynomial with sparse exponent-vector storage.

    ``prime`` is the field characteristic; 0 selects exact rationals.
    Zero coefficients are dropped on construction.
    """

    num_vars: int
    degree: int
    terms: Mapping[Exponent, object] = field(default_factory=dict)
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError(f"a form needs at least one variable, got {self.num_vars}")
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        if self.prime != RATIONAL:
            check_prime(self.prime)
        clean = {}
        for exp, coeff in self.terms.items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != self.num_vars or any(x < 0 for x in exp):
                raise ValueError(f"bad exponent vector {exp} for {self.num_vars} variables")
            if sum(exp) != self.degree:
                raise ValueError(f"exponent vector {exp} does not have degree {self.degree}")
            c = _normalize(coeff, self.prime)
            if c:
                clean[exp] = c
        object.__setattr__(self, "terms", clean)

    def __hash__(self):
        return hash((self.num_vars, self.degree, self.prime, frozenset(self.terms.items())))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: Exponent):
        return self.terms.get(exp, 0)

    def __add__(self, other: "Form") -> "Form":
        if (self.num_vars, self.degree, self.prime) != (other.num_vars, other.degree, other.prime):
            raise ValueError("can only add forms with matching variables, degree and field")
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return Form(self.num_vars, self.degree, terms, self.prime)

    def with_vars(self, num_vars: int) -> "Form":
        """The same polynomial viewed in more variables (appended at the end)."""
        if num_vars < self.num_vars:
            raise ValueError("cannot drop variables")
        pad = (0,) * (num_vars - self.num_vars)
        return Form(num_vars, self.degree, {e + pad: c for e, c in self.terms.items()}, self.prime)

    def with_field(self, prime: int) -> "Form":
        """Reinterpret the coefficients (integer lifts or rationals) in another field."""
        return Form(self.num_vars, self.degree, dict(self.terms), prime)

    @classmethod
    def power_sum(cls, num_vars: int, degree: int, prime: int = DEFAULT_PRIME) -> "Form":
        terms = {}
        for v in range(num_vars):
            exp = [0] * num_vars
            exp[v] = degree
            terms[tuple(exp)] = 1
        return cls(num_vars, degree, terms, prime)

    @classmethod
    def monomial(cls, exp: Sequence[int], prime: int = DEFAULT_PRIME, coeff=1) -> "Form":
        exp = tuple(exp)
        return cls(len(exp), sum(exp), {exp: coeff}, prime)


@dataclass(frozen=True)
class CatalecticantMatrix:
    operator_degree: int
    rows: tuple[Exponent, ...]  # degree-i operator monomials
    cols: tuple[Exponent, ...]  # degree-(e-i) monomials
    entries: list  # list of rows
    prime: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, alpha: Exponent, gamma: Exponent):
        return self.entries[self.rows.index(alpha)][self.cols.index(gamma)]

    def rank(self) -> int:
        # all-zero columns never matter; dropping them keeps wide matrices small
        keep = [j for j in range(len(self.cols)) if any(row[j] for row in self.entries)]
        if not keep:
            return 0
        dense = [[row[j] for j in keep] for row in self.entries]
        if self.prime == RATIONAL:
            return rank_rational(dense)
        return rank_mod_p(dense, self.prime)


def _sub_exponents(beta: Exponent, i: int) -> Iterator[Exponent]:
    """All alpha <= beta componentwise with |alpha| = i."""
    n = len(beta)

    def rec(k: int, left: int, prefix: tuple):
        if k == n - 1:
            if left <= beta[k]:
                yield prefix + (left,)
            return
        rest = sum(beta[k + 1:])
        for x in range(min(beta[k], left), -1, -1):
            if left - x <= rest:
                yield from rec(k + 1, left - x, prefix + (x,))

    yield from rec(0, i, ())


def catalecticant(F: Form, i: int) -> CatalecticantMatrix:
    """Contraction matrix with entry ``coeff_F(alpha + gamma)`` at (x^alpha, y^gamma)."""
    if F.is_zero:
        raise ValueError("the zero form has no apolar algebra")
    if not 0 <= i <= F.degree:
        raise ValueError(f"operator degree must be in 0..{F.degree}, got {i}")
    n, e = F.num_vars, F.degree
    rows = monomials(n, i)
    cols = monomials(n, e - i)
    row_ix = _monomial_index(n, i)
    col_ix = _monomial_index(n, e - i)
    entries = [[0] * len(cols) for _ in rows]
    for beta, c in F.terms.items():
        for alpha in _sub_exponents(beta, i):
            gamma = tuple(b - a for a, b in zip(alpha, beta))
            entries[row_ix[alpha]][col_ix[gamma]] = c
    return CatalecticantMatrix(i, rows, cols, entries, F.prime)


def _catalecticant_rank(F: Form, i: int) -> int:
    # same matrix as catalecticant(F, i) but assembled directly from the support
    n, e = F.num_vars, F.degree
    row_ix = _monomial_index(n, i)
    col_ix: dict = {}
    cells = []
    for beta, c in F.terms.items():
        for alpha in _sub_exponents(beta, i):
            gamma = tuple(b - a for a, b in zip(alpha, beta))
            j = col_ix.setdefault(gamma, len(col_ix))
            cells.append((row_ix[alpha], j, c))
    used_rows = sorted({r for r, _, _ in cells})
    rmap = {r: k for k, r in enumerate(used_rows)}
    if F.prime == RATIONAL:
        dense = [[0] * len(col_ix) for _ in used_rows]
        for r, j, c in cells:
            dense[rmap[r]][j] = c
        return rank_rational(dense)
    a = np.zeros((len(used_rows), len(col_ix)), dtype=np.int64)
    for r, j, c in cells:
        a[rmap[r], j] = c
    return rank_mod_p(a, F.prime)


def hilbert_of_form(F: Form) -> HVector:
    """h-vector of ``R/Ann(F)``: the catalecticant ranks in degrees 0..e."""
    if F.is_zero:
        raise ValueError("the zero form has no apolar algebra")
    return HVector(_catalecticant_rank(F, i) for i in range(F.degree + 1))


def trivial_extension_form(generators: Sequence[Form]) -> Form:
    """``sum z_i * G_i`` in fresh variables ``z_1..z_t`` appended after the y's."""
    if not generators:
        raise ValueError("need at least one generator")
    g0 = generators[0]
    for g in generators:
        if g.degree != g0.degree:
            raise ValueError(f"generators have mixed degrees {g0.degree} and {g.degree}")
        if g.num_vars != g0.num_vars:
            raise ValueError(f"generators live in {g0.num_vars} and {g.num_vars} variables")
        if g.prime != g0.prime:
            raise ValueError("generators are over different fields")
    n, t = g0.num_vars, len(generators)
    terms = {}
    for k, g in enumerate(generators):
        z = tuple(1 if s == k else 0 for s in range(t))
        for exp, c in g.terms.items():
            terms[exp + z] = c
    return Form(n + t, g0.degree + 1, terms, g0.prime)


def lift_form(F: Form) -> Form:
    """``F + y_new^e`` with ``y_new`` a fresh last variable."""
    return F.with_vars(F.num_vars + 1) + Form.monomial((0,) * F.num_vars + (F.degree,), F.prime)


def stanley_form(prime: int = DEFAULT_PRIME) -> Form:
    """``sum z_i M_i`` over the ten cubic monomials ``M_i`` in three variables."""
    return trivial_extension_form([Form.monomial(m, prime) for m in monomials(3, 3)])


# -- random forms and witness search ---------------------------------------


def _random_coeffs(rng: np.random.Generator, count: int, prime: int) -> list:
    if prime == RATIONAL:
        vals = rng.integers(1, 100, size=count) * rng.choice([-1, 1], size=count)
    else:
        vals = rng.integers(1, prime, size=count)
    return [int(v) for v in vals]


def random_form(num_vars: int, degree: int, rng: np.random.Generator,
                prime: int = DEFAULT_PRIME, density: Optional[float] = None) -> Form:
    """Random form; ``density`` in (0, 1] keeps each monomial with that probability.

    The result is never zero: an empty draw falls back to one random monomial.
    """
    monos = monomials(num_vars, degree)
    if density is None:
        support = list(monos)
    else:
        keep = rng.random(len(monos)) < density
        support = [m for m, k in zip(monos, keep) if k]
        if not support:
            support = [monos[int(rng.integers(len(monos)))]]
    return Form(num_vars, degree, dict(zip(support, _random_coeffs(rng, len(support), prime))), prime)


def _lifted(F: Form, times: int) -> Form:
    for _ in range(times):
        F = lift_form(F)
    return F


def structured_candidates(r: int, e: int, prime: int = DEFAULT_PRIME) -> Iterator[Form]:
    """Deterministic catalogue tried before any random form.

    Power sums first, then trivial extensions of initial and final segments of
    the degree-(e-1) monomials in s variables, padded to codimension r by lifts.
    """
    yield Form.power_sum(r, e, prime)
    if e < 2:
        return
    seen = set()
    for s in range(1, r):
        pool = monomials(s, e - 1)
        for t in range(1, min(r - s, len(pool)) + 1):
            for chosen in (pool[:t], pool[-t:]):
                key = (s, chosen)
                if key in seen:
                    continue
                seen.add(key)
                F = trivial_extension_form([Form.monomial(m, prime) for m in chosen])
                yield _lifted(F, r - s - t)


def _random_candidate(r: int, e: int, prime: int, seed: int, trial: int) -> Form:
    rng = np.random.default_rng([seed, trial])
    kind = trial % 3
    if kind == 0 or e < 2 or r < 2:
        return random_form(r, e, rng, prime)
    if kind == 1:
        monos = monomials(r, e)
        size = int(rng.integers(r, min(3 * r, len(monos)) + 1)) if len(monos) > r else len(monos)
        picks = rng.choice(len(monos), size=size, replace=False)
        support = [monos[int(k)] for k in sorted(picks)]
        return Form(r, e, dict(zip(support, _random_coeffs(rng, size, prime))), prime)
    # random trivial extension over random generators, then lifts
    s = int(rng.integers(1, r))
    pool = monomials(s, e - 1)
    t = int(rng.integers(1, min(r - s, len(pool)) + 1))
    gens = [random_form(s, e - 1, rng, prime, density=float(rng.uniform(0.1, 1.0))) for _ in range(t)]
    return _lifted(trivial_extension_form(gens), r - s - t)


def _matches(F: Form, target: HVector) -> bool:
    if F.num_vars < target[1] or F.is_zero:
        return False
    e = F.degree
    # ranks are symmetric (transposed flattenings), so half the degrees decide it
    for i in range(1, e // 2 + 1):
        if _catalecticant_rank(F, i) != target[i]:
            return False
    return hilbert_of_form(F) == target


def search_form(target: Iterable[int], trials: int, prime: int = DEFAULT_PRIME,
                seed: int = 0, workers: int = 1) -> Optional[Form]:
    """Look for a form whose apolar algebra has h-vector ``target``.

    Tries :func:`structured_candidates` first, then ``trials`` seeded random
    forms; trial ``k`` draws from its own stream ``(seed, k)`` so the answer
    does not depend on ``workers``.  ``None`` is evidence, not proof, that no
    such form exists.
    """
    target = as_hvector(target).trimmed()
    if len(target) < 2 or target[0] != 1:
        raise ValueError(f"target must look like (1, r, ..., 1), got {target}")
    if target != target[::-1]:
        raise ValueError(f"target is not symmetric: {target}")
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    r, e = target[1], len(target) - 1
    if r < 1:
        raise ValueError(f"target codimension must be >= 1, got {r}")

    for F in structured_candidates(r, e, prime):
        if _matches(F, target):
            return F

    def attempt(k: int) -> Optional[Form]:
        F = _random_candidate(r, e, prime, seed, k)
        return F if _matches(F, target) else None

    if workers <= 1:
        for k in range(trials):
            F = attempt(k)
            if F is not None:
                return F
        return None
    with ThreadPoolExecutor(workers) as pool:
        for start in range(0, trials, 4 * workers):
            batch = range(start, min(trials, start + 4 * workers))
            for F in pool.map(attempt, batch):
                if F is not None:
                    return F
    return None


# -- text format -------------------------------------------------------------


class FormParseError(ValueError):
    pass


_HEADER = re.compile(r"^vars=(\d+)\s+degree=(\d+)\s+prime=(\d+)$")


def parse_form(text: str) -> Form:
    """Parse the ``vars=<n> degree=<e> prime=<p>`` text format.

    Blank lines and lines starting with ``#`` are skipped.  Every other line
    is ``<coefficient> <e1> ... <en>``; rational coefficients may be written
    ``a/b``.  Errors carry the offending line number.
    """
    header = None
    terms: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise FormParseError(f"line {lineno}: expected header 'vars=<n> degree=<e> prime=<p>'")
            header = tuple(int(g) for g in m.groups())
            n, e, p = header
            if n < 1:
                raise FormParseError(f"line {lineno}: vars must be >= 1")
            if p != RATIONAL:
                try:
                    check_prime(p)
                except ValueError as exc:
                    raise FormParseError(f"line {lineno}: {exc}") from None
            continue
        parts = line.split()
        if len(parts) != n + 1:
            raise FormParseError(f"line {lineno}: expected a coefficient and {n} exponents, got {len(parts)} fields")
        try:
            coeff = Fraction(parts[0])
        except (ValueError, ZeroDivisionError):
            raise FormParseError(f"line {lineno}: bad coefficient {parts[0]!r}") from None
        if p != RATIONAL and coeff.denominator != 1:
            raise FormParseError(f"line {lineno}: fractional coefficient in a prime field")
        try:
            exp = tuple(int(x) for x in parts[1:])
        except ValueError:
            raise FormParseError(f"line {lineno}: exponents must be integers") from None
        if any(x < 0 for x in exp):
            raise FormParseError(f"line {lineno}: negative exponent")
        if sum(exp) != e:
            raise FormParseError(f"line {lineno}: exponents sum to {sum(exp)}, expected {e}")
        if exp in terms:
            raise FormParseError(f"line {lineno}: duplicate monomial {exp}")
        terms[exp] = coeff if p == RATIONAL else int(coeff)
    if header is None:
        raise FormParseError("line 1: missing header")
    return Form(n, e, terms, p)


def format_form(F: Form) -> str:
    lines = [f"vars={F.num_vars} degree={F.degree} prime={F.prime}"]
    index = _monomial_index(F.num_vars, F.degree)
    for exp in sorted(F.terms, key=index.__getitem__):
        lines.append(" ".join([str(F.terms[exp])] + [str(x) for x in exp]))
    return "\n".join(lines) + "\n"


def read_form(path) -> Form:
    with open(path) as fh:
        return parse_form(fh.read())
