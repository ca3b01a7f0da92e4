"""Graded-commutative algebra over Z/p, presented by truncations and substitutions.

A presentation lists ordered generators, each with a positive degree and an
optional rewrite rule: either a truncation x^t = 0 or a substitution
x^t = (monomial in strictly later generators).  Monomials are exponent vectors
with a coefficient in Z/p.  Sorting generator factors costs one (-1) per
transposition of two odd-degree factors (the Koszul sign); over an odd prime
this forces the square of every odd-degree generator to vanish, whether or not
the presentation says so.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

_NILPOTENCY_FALLBACK_CAP = 4096


class AlgebraError(ValueError):
    """Raised for invalid presentations or malformed monomial input."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Generator:
    """A ring generator: name, degree >= 1, optional truncation, search weight."""

    name: str
    degree: int
    trunc: int | None = None
    weight: int = 1


@dataclass(frozen=True)
class Substitution:
    """Rewrite rule g^exponent -> coeff * prod(powers), later generators only."""

    exponent: int
    coeff: int
    powers: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class Monomial:
    """coeff * prod(g_i^exps[i]) with exps indexed by ring generator order."""

    coeff: int
    exps: tuple[int, ...]

    def is_zero(self) -> bool:
        return self.coeff == 0


@dataclass(frozen=True)
class Element:
    """A sum of normal-form monomials with pairwise distinct exponent vectors."""

    terms: tuple[Monomial, ...]

    def is_zero(self) -> bool:
        return not self.terms


class RingPresentation:
    """An ordered, finitely presented graded-commutative Z/p algebra.

    generators may be Generator instances or shorthand tuples
    (name, degree), (name, degree, trunc) or (name, degree, trunc, weight).
    substitutions maps a generator name to a Substitution; a generator may
    carry a truncation or a substitution, never both.
    """

    def __init__(
        self,
        p: int,
        generators: Iterable[Generator | tuple],
        substitutions: Mapping[str, Substitution] | None = None,
        top_degree_hint: int | None = None,
        name: str = "R",
    ):
        if not isinstance(p, int) or not _is_prime(p):
            raise AlgebraError(f"modulus must be a prime >= 2 (got {p!r})")
        self.p = p
        self.name = name
        gens: list[Generator] = []
        for g in generators:
            if not isinstance(g, Generator):
                g = Generator(*g)
            gens.append(g)
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._index = {g.name: i for i, g in enumerate(gens)}
        if len(self._index) != len(gens):
            raise AlgebraError(f"duplicate generator name in ring {name!r}")
        for g in gens:
            if not g.name:
                raise AlgebraError("generator name must be nonempty")
            if not isinstance(g.degree, int) or g.degree < 1:
                raise AlgebraError(
                    f"generator {g.name!r} must have degree >= 1 (got {g.degree!r})"
                )
            if g.trunc is not None and (not isinstance(g.trunc, int) or g.trunc < 2):
                raise AlgebraError(
                    f"truncation of {g.name!r} must be an integer >= 2 (got {g.trunc!r})"
                )
            if not isinstance(g.weight, int) or g.weight < 1:
                raise AlgebraError(f"weight of {g.name!r} must be an integer >= 1")
        if top_degree_hint is not None and top_degree_hint < 1:
            raise AlgebraError("top_degree_hint must be positive when given")
        self.top_degree_hint = top_degree_hint
        self._odd = tuple(g.degree % 2 == 1 for g in gens)

        # Normalize rules: zero-target substitutions become truncations.
        trunc = [g.trunc for g in gens]
        subs: list[tuple[int, int, tuple[int, ...]] | None] = [None] * len(gens)
        self.substitutions: dict[str, Substitution] = {}
        for src, sub in sorted((substitutions or {}).items()):
            if src not in self._index:
                raise AlgebraError(f"substitution on unknown generator {src!r}")
            i = self._index[src]
            if not isinstance(sub.exponent, int) or sub.exponent < 2:
                raise AlgebraError(f"substitution exponent on {src!r} must be >= 2")
            coeff = sub.coeff % p
            texps = [0] * len(gens)
            tdeg = 0
            for tname, te in sub.powers:
                if tname not in self._index:
                    raise AlgebraError(
                        f"substitution target {tname!r} is not a generator"
                    )
                j = self._index[tname]
                if j <= i:
                    raise AlgebraError(
                        f"substitution target {tname!r} must come strictly after {src!r}"
                    )
                if te < 1:
                    raise AlgebraError("substitution target exponents must be >= 1")
                texps[j] += te
                tdeg += te * gens[j].degree
            if coeff != 0 and tdeg != sub.exponent * gens[i].degree:
                raise AlgebraError(
                    f"substitution {src}^{sub.exponent} is not degree-homogeneous"
                )
            if coeff == 0 or not any(texps):
                if coeff != 0:
                    raise AlgebraError(
                        f"substitution {src}^{sub.exponent} = {coeff} is not "
                        "degree-homogeneous (constant target)"
                    )
                # g^t = 0 is a truncation in disguise.
                if trunc[i] is not None:
                    raise AlgebraError(
                        f"generator {src!r} has both a truncation and a relation"
                    )
                trunc[i] = sub.exponent
                continue
            if trunc[i] is not None:
                raise AlgebraError(
                    f"generator {src!r} has both a truncation and a substitution"
                )
            if subs[i] is not None:
                raise AlgebraError(f"generator {src!r} has two substitutions")
            if p != 2 and self._odd[i]:
                raise AlgebraError(
                    f"odd-degree generator {src!r} squares to zero over Z/{p}; "
                    "a substitution with nonzero target is inconsistent"
                )
            subs[i] = (sub.exponent, coeff, tuple(texps))
            self.substitutions[src] = Substitution(
                sub.exponent, coeff, tuple(sub.powers)
            )

        # Effective truncation: the declared one, plus the forced square-zero
        # rule for odd-degree generators over an odd prime.
        eff: list[int | None] = list(trunc)
        for i, g in enumerate(gens):
            if p != 2 and self._odd[i] and subs[i] is None:
                if eff[i] is not None and eff[i] != 2:
                    raise AlgebraError(
                        f"odd-degree generator {g.name!r} over Z/{p} squares to "
                        f"zero; truncation {eff[i]} is inconsistent"
                    )
                eff[i] = 2
        self._declared_trunc = tuple(trunc)
        self._eff_trunc: tuple[int | None, ...] = tuple(eff)
        self._subs = tuple(subs)

    # -- basic queries ----------------------------------------------------

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r}") from None

    def effective_truncation(self, name: str) -> int | None:
        return self._eff_trunc[self.index(name)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return (
            self.p == other.p
            and self.generators == other.generators
            and self.substitutions == other.substitutions
            and self.top_degree_hint == other.top_degree_hint
        )

    def __hash__(self):
        return hash((self.p, self.generators, self.top_degree_hint))

    def __repr__(self):
        return f"RingPresentation({self.name!r}, Z/{self.p}, {len(self.generators)} gens)"

    # -- constructors ------------------------------------------------------

    def zero_monomial(self) -> Monomial:
        return Monomial(0, (0,) * self.ngens)

    def one(self) -> Monomial:
        return Monomial(1 % self.p, (0,) * self.ngens)

    def monomial(self, powers: Mapping[str, int] | None = None, coeff: int = 1) -> Monomial:
        """Build a raw monomial from generator powers; not normalized."""
        exps = [0] * self.ngens
        for name, e in (powers or {}).items():
            if e < 0:
                raise AlgebraError("exponents must be non-negative")
            exps[self.index(name)] += e
        return Monomial(coeff % self.p, tuple(exps))

    def monomial_word(self, word: Sequence[str], coeff: int = 1) -> Monomial:
        """Build a monomial from an ordered factor word, accumulating the
        Koszul sign needed to sort it, then normalize."""
        idxs = [self.index(w) for w in word]
        parity = 0
        for a in range(len(idxs)):
            if not self._odd[idxs[a]]:
                continue
            for b in range(a + 1, len(idxs)):
                if idxs[b] < idxs[a] and self._odd[idxs[b]]:
                    parity ^= 1
        exps = [0] * self.ngens
        for i in idxs:
            exps[i] += 1
        c = (-coeff if parity else coeff) % self.p
        return normal_form(Monomial(c, tuple(exps)), self)

    def element(self, monomials: Iterable[Monomial]) -> Element:
        return element(monomials, self)


def _koszul_parity(u: Sequence[int], v: Sequence[int], odd: Sequence[bool]) -> int:
    """Parity of odd-odd inversions when the sorted word u is followed by v."""
    parity = 0
    pref = 0  # running count (mod 2) of odd factors of v with index < a
    for a in range(len(u)):
        if odd[a]:
            if (u[a] & 1) and (pref & 1):
                parity ^= 1
            pref ^= v[a] & 1
    return parity


def normal_form(m: Monomial, ring: RingPresentation) -> Monomial:
    """Rewrite m to normal form: coefficient reduced mod p, substitutions and
    truncations applied exhaustively.  The canonical zero has coefficient 0
    and an all-zero exponent vector."""
    if len(m.exps) != ring.ngens:
        raise AlgebraError("monomial has wrong exponent vector length")
    p = ring.p
    c = m.coeff % p
    if c == 0:
        return ring.zero_monomial()
    e = list(m.exps)
    odd = ring._odd
    for i in range(ring.ngens):
        sub = ring._subs[i]
        if sub is not None:
            t, tc, texps = sub
            while e[i] >= t:
                e[i] -= t
                # The replaced block sits left of every factor with a larger
                # index, so only the suffix contributes Koszul inversions.
                parity = 0
                pref = 0
                for a in range(i + 1, ring.ngens):
                    if odd[a]:
                        if (texps[a] & 1) and (pref & 1):
                            parity ^= 1
                        pref ^= e[a] & 1
                c = (c * tc * (-1 if parity else 1)) % p
                if c == 0:
                    return ring.zero_monomial()
                for j in range(i + 1, ring.ngens):
                    e[j] += texps[j]
        cap = ring._eff_trunc[i]
        if cap is not None and e[i] >= cap:
            return ring.zero_monomial()
    return Monomial(c, tuple(e))


def degree(m: Monomial, ring: RingPresentation) -> int | None:
    """Total degree of a monomial; None for zero."""
    if m.is_zero():
        return None
    return sum(e * g.degree for e, g in zip(m.exps, ring.generators))


def multiply_monomials(u: Monomial, v: Monomial, ring: RingPresentation) -> Monomial:
    """Product of two monomials, Koszul sign included, in normal form."""
    parity = _koszul_parity(u.exps, v.exps, ring._odd)
    c = u.coeff * v.coeff * (-1 if parity else 1)
    exps = tuple(a + b for a, b in zip(u.exps, v.exps))
    return normal_form(Monomial(c, exps), ring)


def element(monomials: Iterable[Monomial], ring: RingPresentation) -> Element:
    """Normalize and merge monomials into an Element (terms sorted by exponents)."""
    acc: dict[tuple[int, ...], int] = {}
    for m in monomials:
        nm = normal_form(m, ring)
        if nm.is_zero():
            continue
        acc[nm.exps] = (acc.get(nm.exps, 0) + nm.coeff) % ring.p
    terms = tuple(
        Monomial(c, x) for x, c in sorted(acc.items()) if c != 0
    )
    return Element(terms)


def add(u: Element, v: Element, ring: RingPresentation) -> Element:
    return element(u.terms + v.terms, ring)


def scale(u: Element, c: int, ring: RingPresentation) -> Element:
    return element((Monomial(m.coeff * c, m.exps) for m in u.terms), ring)


def multiply(u: Element, v: Element, ring: RingPresentation) -> Element:
    """Product of two Elements: all pairwise monomial products, merged."""
    out = []
    for a in u.terms:
        for b in v.terms:
            out.append(multiply_monomials(a, b, ring))
    return element(out, ring)


def _power_bound(ring: RingPresentation, i: int) -> int | None:
    """A finite exponent known to kill generator i on its own, if any."""
    if ring._eff_trunc[i] is not None:
        return ring._eff_trunc[i]
    if ring._subs[i] is not None:
        return ring._subs[i][0]
    return None


def nilpotency_order(name: str, ring: RingPresentation) -> int:
    """Least k with g^k = 0.  Capped by ceil(hint/deg)+1 when a top-degree
    hint exists, else by the product of all per-generator bounds; exceeding
    the cap signals a non-nilpotent generator, hence an invalid presentation
    (these algebras are finite-dimensional)."""
    i = ring.index(name)
    d = ring.generators[i].degree
    if ring.top_degree_hint is not None:
        cap = -(-ring.top_degree_hint // d) + 1
    else:
        cap = 1
        for j in range(ring.ngens):
            b = _power_bound(ring, j)
            if b is None:
                cap = _NILPOTENCY_FALLBACK_CAP
                break
            cap *= b
    exps = [0] * ring.ngens
    for k in range(1, cap + 1):
        exps[i] = k
        if normal_form(Monomial(1, tuple(exps)), ring).is_zero():
            return k
    raise AlgebraError(
        f"generator {name!r} is not nilpotent within {cap} powers; "
        "the presentation does not describe a finite-dimensional algebra"
    )
