"""Exact arithmetic in F_{ell^r} with polynomial-basis coordinates.

Elements are stored internally as a single integer index in [0, ell^r):
the base-ell digits of the index are the coefficients of the residue
polynomial, constant term first.  The index encoding is also the wire
encoding used by the matrix-group kernel, so everything downstream is
bit-exact.

The modulus of a field is canonical: the lexicographically least monic
irreducible polynomial of the right degree, coefficient tuples compared
constant-term first.  Two calls to :func:`field_make` with the same
arguments therefore return the identical spec object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import (
    FieldTooLarge,
    NoEmbedding,
    NotGenerator,
    NotPrime,
    SpecMismatch,
    ZeroArgument,
)

FIELD_LIMIT = 10**6        # largest ell^degree we agree to work with
_TABLE_LIMIT = 1024        # build dense q x q tables below this size


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs only)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a modulo `modulus`; a must be coprime to the modulus."""
    from math import gcd

    if gcd(a, modulus) != 1:
        raise ValueError(f"{a} not invertible mod {modulus}")
    group = modulus - 1 if is_prime(modulus) else _euler_phi(modulus)
    order = group
    for p in factorize(group):
        while order % p == 0 and pow(a, order // p, modulus) == 1:
            order //= p
    return order


def _euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out -= out // p
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over F_ell (coefficient lists, constant term first)
# ---------------------------------------------------------------------------

def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mulmod(f: list[int], g: list[int], mod: list[int], ell: int) -> list[int]:
    prod = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] = (prod[i + j] + a * b) % ell
    return _poly_rem(prod, mod, ell)


def _poly_rem(f: list[int], mod: list[int], ell: int) -> list[int]:
    f = list(f)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, ell)
    while len(f) > dm:
        c = f[-1] * inv_lead % ell
        if c:
            off = len(f) - 1 - dm
            for j, b in enumerate(mod):
                f[off + j] = (f[off + j] - c * b) % ell
        f.pop()
    return _poly_trim(f)


def _poly_gcd(f: list[int], g: list[int], ell: int) -> list[int]:
    f, g = list(f), list(g)
    while g:
        f, g = g, _poly_rem(f, g, ell)
    return f


def _poly_powmod(base: list[int], e: int, mod: list[int], ell: int) -> list[int]:
    result = [1]
    acc = _poly_rem(list(base), mod, ell)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, ell)
        acc = _poly_mulmod(acc, acc, mod, ell)
        e >>= 1
    return result


def _poly_sub(f: list[int], g: list[int], ell: int) -> list[int]:
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return _poly_trim([(a - b) % ell for a, b in zip(f, g)])


def _is_irreducible(mod: list[int], ell: int) -> bool:
    # standard criterion: x^(ell^r) = x mod f, and x^(ell^(r/p)) - x coprime
    # to f for every prime p dividing r
    r = len(mod) - 1
    x = [0, 1]
    xq = _poly_powmod(x, ell**r, mod, ell)
    if _poly_sub(xq, x, ell):
        return False
    for p in factorize(r):
        xe = _poly_powmod(x, ell ** (r // p), mod, ell)
        g = _poly_gcd(list(mod), _poly_sub(xe, x, ell), ell)
        if len(g) - 1 != 0:
            return False
    return True


def _monic_polys_lex(ell: int, degree: int) -> Iterator[list[int]]:
    """Monic degree-`degree` polynomials in lex order on (c0, c1, ...)."""
    from itertools import product

    for coeffs in product(range(ell), repeat=degree):
        yield list(coeffs) + [1]


# ---------------------------------------------------------------------------
# field specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_{ell^degree} with its canonical modulus.

    Construct via :func:`field_make`; direct construction skips the
    canonicity guarantee.
    """

    ell: int
    degree: int
    modulus: tuple[int, ...]   # length degree+1, constant term first, monic

    @property
    def order(self) -> int:
        return self.ell ** self.degree

    def __repr__(self) -> str:
        return f"F({self.ell}^{self.degree})" if self.degree > 1 else f"F({self.ell})"

    @property
    def ctx(self) -> "_Fq":
        return _context(self)


@lru_cache(maxsize=None)
def field_make(ell: int, degree: int) -> FieldSpec:
    """Canonical spec for F_{ell^degree}; deterministic across runs."""
    if not is_prime(ell):
        raise NotPrime(f"{ell} is not prime")
    if degree < 1:
        raise ValueError("degree must be positive")
    if ell**degree > FIELD_LIMIT:
        raise FieldTooLarge(f"{ell}^{degree} exceeds {FIELD_LIMIT}")
    if degree == 1:
        return FieldSpec(ell, 1, (0, 1))
    for mod in _monic_polys_lex(ell, degree):
        if _is_irreducible(mod, ell):
            return FieldSpec(ell, degree, tuple(mod))
    raise AssertionError("no irreducible polynomial found")  # unreachable


class _Fq:
    """Arithmetic context for one field spec; scalars are integer indices."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.ell = spec.ell
        self.r = spec.degree
        self.q = spec.order
        self.mod = list(spec.modulus)
        self._gen: int | None = None
        self._tables = None
        self._exp = None
        self._log = None

    # -- digit <-> index --

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            a, d = divmod(a, self.ell)
            out.append(d)
        return tuple(out)

    def encode(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.ell + (c % self.ell)
        return a

    # -- scalar arithmetic on indices --

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.ell
        da, db = self.digits(a), self.digits(b)
        return self.encode((x + y) % self.ell for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.ell
        return self.encode((-x) % self.ell for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.ell
        if a == 0 or b == 0:
            return 0
        exp, log = self.exp_log()
        return int(exp[(int(log[a]) + int(log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.r == 1:
            return pow(a, -1, self.ell)
        exp, log = self.exp_log()
        return int(exp[(-int(log[a])) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        e %= self.q - 1
        result = 1
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def frob(self, a: int) -> int:
        return self.pow(a, self.ell) if a else 0

    def _raw_mul(self, a: int, b: int) -> int:
        """Polynomial multiplication, used before exp/log tables exist."""
        pa = _poly_trim(list(self.digits(a)))
        pb = _poly_trim(list(self.digits(b)))
        if not pa or not pb:
            return 0
        return self.encode(_poly_mulmod(pa, pb, self.mod, self.ell) + [0] * self.r)

    # -- generator and logarithm tables --

    def generator(self) -> int:
        """Least element in coefficient-lex order with full order q-1."""
        if self._gen is None:
            fac = factorize(self.q - 1) if self.q > 2 else {}
            for cand in self._elements_lex():
                if cand == 0:
                    continue
                if self.q == 2:
                    self._gen = cand
                    break
                if all(self._raw_pow(cand, (self.q - 1) // p) != 1 for p in fac):
                    self._gen = cand
                    break
        return self._gen

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        acc = a
        while e:
            if e & 1:
                result = self._raw_mul(result, acc)
            acc = self._raw_mul(acc, acc)
            e >>= 1
        return result

    def _elements_lex(self) -> Iterator[int]:
        from itertools import product

        if self.r == 1:
            yield from range(self.ell)
            return
        for coeffs in product(range(self.ell), repeat=self.r):
            yield self.encode(coeffs)

    def exp_log(self):
        """Power and logarithm tables for the canonical generator."""
        if self._exp is None:
            import numpy as np

            g = self.generator()
            exp = np.zeros(self.q - 1, dtype=np.int64)
            log = np.full(self.q, -1, dtype=np.int64)
            acc = 1
            for i in range(self.q - 1):
                exp[i] = acc
                log[acc] = i
                acc = self._raw_mul(acc, g)
            if acc != 1:
                raise AssertionError("generator order mismatch")
            self._exp, self._log = exp, log
        return self._exp, self._log

    def tables(self):
        """Dense (q,q) add/mul tables plus neg/inv arrays for the kernel."""
        if self._tables is None:
            import numpy as np

            if self.q > _TABLE_LIMIT:
                raise FieldTooLarge(
                    f"dense tables unavailable for q={self.q} > {_TABLE_LIMIT}")
            q, ell, r = self.q, self.ell, self.r
            idx = np.arange(q, dtype=np.int64)
            digs = np.zeros((q, r), dtype=np.int64)
            t = idx.copy()
            for j in range(r):
                digs[:, j] = t % ell
                t //= ell
            powers = ell ** np.arange(r, dtype=np.int64)
            add = ((digs[:, None, :] + digs[None, :, :]) % ell) @ powers
            neg = ((-digs) % ell) @ powers
            exp, log = self.exp_log()
            mul = np.zeros((q, q), dtype=np.int64)
            nz = idx[1:]
            mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(-log[nz]) % (q - 1)]
            self._tables = (add.astype(np.int64), mul, neg.astype(np.int64), inv)
        return self._tables


_CTX: dict[FieldSpec, _Fq] = {}


def _context(spec: FieldSpec) -> _Fq:
    ctx = _CTX.get(spec)
    if ctx is None:
        ctx = _CTX[spec] = _Fq(spec)
    return ctx


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    """An element of F_{ell^r}, carried with its spec.

    Mixed-spec arithmetic raises :class:`SpecMismatch`; subfield questions
    must go through :func:`subfield_embed` explicitly.
    """

    spec: FieldSpec
    index: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.ctx.digits(self.index)

    @staticmethod
    def from_coeffs(spec: FieldSpec, coeffs) -> "FieldElement":
        return FieldElement(spec, spec.ctx.encode(coeffs))

    def _chk(self, other: "FieldElement"):
        if self.spec is not other.spec and self.spec != other.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other):
        self._chk(other)
        return FieldElement(self.spec, self.spec.ctx.add(self.index, other.index))

    def __sub__(self, other):
        self._chk(other)
        return FieldElement(self.spec, self.spec.ctx.sub(self.index, other.index))

    def __mul__(self, other):
        self._chk(other)
        return FieldElement(self.spec, self.spec.ctx.mul(self.index, other.index))

    def __truediv__(self, other):
        self._chk(other)
        ctx = self.spec.ctx
        return FieldElement(self.spec, ctx.mul(self.index, ctx.inv(other.index)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.ctx.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.ctx.pow(self.index, e))

    def __bool__(self) -> bool:
        return self.index != 0

    def serialize(self) -> list[int]:
        return list(self.coeffs)


def element(spec: FieldSpec, value) -> FieldElement:
    """Build an element from an integer (prime residue) or coefficient list."""
    if isinstance(value, int):
        if spec.degree == 1:
            return FieldElement(spec, value % spec.ell)
        return FieldElement.from_coeffs(spec, [value] + [0] * (spec.degree - 1))
    return FieldElement.from_coeffs(spec, value)


def zero(spec: FieldSpec) -> FieldElement:
    return FieldElement(spec, 0)


def one(spec: FieldSpec) -> FieldElement:
    return FieldElement(spec, 1)


# ---------------------------------------------------------------------------
# spec-level operations
# ---------------------------------------------------------------------------

def mult_generator(spec: FieldSpec) -> FieldElement:
    """Deterministic generator of the multiplicative group of the field."""
    return FieldElement(spec, spec.ctx.generator())


def _order_of(ctx: _Fq, a: int) -> int:
    if a == 0:
        raise ZeroArgument("zero has no multiplicative order")
    order = ctx.q - 1
    for p in factorize(order):
        while order % p == 0 and ctx.pow(a, order // p) == 1:
            order //= p
    return order


def discrete_log(x: FieldElement, g: FieldElement) -> int:
    """k with g^k = x, by baby-step giant-step; g must be a generator."""
    x._chk(g)
    ctx = x.spec.ctx
    if ctx.q > FIELD_LIMIT:
        raise FieldTooLarge(f"field of size {ctx.q} beyond the dlog limit")
    if x.index == 0:
        raise ZeroArgument("discrete log of zero")
    if _order_of(ctx, g.index) != ctx.q - 1:
        raise NotGenerator(f"{g.coeffs} does not generate the unit group")
    n = ctx.q - 1
    import math

    m = math.isqrt(n - 1) + 1
    baby: dict[int, int] = {}
    acc = 1
    for j in range(m):
        baby.setdefault(acc, j)
        acc = ctx.mul(acc, g.index)
    giant_step = ctx.inv(ctx.pow(g.index, m))
    gamma = x.index
    for i in range(m + 1):
        j = baby.get(gamma)
        if j is not None:
            return (i * m + j) % n
        gamma = ctx.mul(gamma, giant_step)
    raise AssertionError("BSGS failed on a valid generator")  # unreachable


def frobenius(x: FieldElement) -> FieldElement:
    """x^ell, the arithmetic Frobenius."""
    return FieldElement(x.spec, x.spec.ctx.frob(x.index))


@dataclass(frozen=True)
class Embedding:
    """A ring embedding of a small field into a big one.

    Determined by the image of the small field's residue class of x;
    composing with Frobenius powers of the big field enumerates all
    embeddings.
    """

    small: FieldSpec
    big: FieldSpec
    image_of_x: FieldElement    # a root of small.modulus inside big

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.spec != self.small:
            raise SpecMismatch("element not in the embedding's source field")
        big = self.big.ctx
        t = self.image_of_x.index
        acc = 0
        power = 1
        for c in x.coeffs:
            if c:
                acc = big.add(acc, big.mul(c % big.ell, power))
            power = big.mul(power, t)
        return FieldElement(self.big, acc)


def subfield_embed(spec_small: FieldSpec, spec_big: FieldSpec) -> Embedding:
    """The canonical embedding F_{ell^d} -> F_{ell^r} for d | r."""
    if spec_small.ell != spec_big.ell:
        raise NoEmbedding("different characteristics")
    if spec_big.degree % spec_small.degree != 0:
        raise NoEmbedding(
            f"{spec_small.degree} does not divide {spec_big.degree}")
    big = spec_big.ctx
    # the canonical root: scan elements whose order divides ell^d - 1 in a
    # deterministic order and take the first root of the small modulus
    d = spec_small.degree
    sub_order = spec_small.order - 1
    mod = spec_small.modulus
    candidates: list[int]
    if sub_order == 0:
        candidates = [0]
    else:
        g = big.generator()
        step = (big.q - 1) // sub_order
        candidates = [0] + [big.pow(g, step * k) for k in range(sub_order)]
    for t in sorted(set(candidates)):
        acc = 0
        power = 1
        for c in mod:
            if c:
                acc = big.add(acc, big.mul(c % big.ell, power))
            power = big.mul(power, t)
        if acc == 0:
            return Embedding(spec_small, spec_big, FieldElement(spec_big, t))
    raise AssertionError("modulus has no root in the extension")  # unreachable
