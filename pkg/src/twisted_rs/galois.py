"""Exact arithmetic in GF(p^m).

An element is stored as one integer ``rep`` in ``[0, q)`` whose base-``p``
digits, least significant first, are its coordinates in the polynomial basis
``1, x, ..., x^(m-1)``.  Integer reps give every element a total order, which
is what makes square roots, primitive elements and RREF pivots deterministic.

Two layers live here:

* :class:`FieldSpec` -- the field, with vectorised numpy operations on arrays
  of reps (``add``, ``mul``, ``inv`` ...).  Everything performance sensitive
  in the package goes through these.
* :class:`FieldElement` -- a small value type with operator overloading for
  scalar work and for the public API.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NonPrime,
    NotASubfieldDegree,
    ReducibleModulus,
    TgrsError,
    UnsupportedSize,
)

MAX_TABLE_Q = 1 << 16
# dense q x q add/mul tables are built only below this size
DENSE_TABLE_Q = 1024


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in ascending order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^m``; raise :class:`NonPrime` if ``q`` is not a prime power."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NonPrime(f"{q} is not a prime power")
    return p, m


# ---------------------------------------------------------------------------
# polynomials over GF(p): coefficient lists, constant term first
# ---------------------------------------------------------------------------
def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p) if p > 2 else 1
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, f, p)


def _poly_powmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    f = [c % p for c in coeffs]
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob(j: int) -> list[int]:
        # x^(p^j) mod f by repeated p-th powers
        h = x
        for _ in range(j):
            h = _poly_powmod(h, p, f, p)
        return h

    if _poly_sub(frob(m), x, p):
        return False
    for r in prime_factors(m):
        g = _poly_gcd(f, _poly_sub(frob(m // r), x, p), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``m`` over GF(p).

    Candidates are ordered by the integer whose base-``p`` digits are the
    lower ``m`` coefficients (constant term least significant).  For
    ``m == 1`` this is the polynomial ``x``.
    """
    if p ** m > MAX_TABLE_Q:
        raise UnsupportedSize(f"no built-in modulus for q={p}^{m} > {MAX_TABLE_Q}")
    if m == 1:
        return (0, 1)
    for c in range(1, p ** m):
        if c % p == 0:
            continue  # divisible by x
        coeffs = [(c // p ** i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("an irreducible polynomial of every degree exists")


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with a fixed polynomial-basis modulus.

    Obtain instances through :func:`make_field`, which validates the
    modulus and caches one instance per field so lookup tables are shared.
    """

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.m

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __call__(self, rep) -> "FieldElement":
        if isinstance(rep, FieldElement):
            self.check(rep)
            return rep
        rep = int(rep)
        if not 0 <= rep < self.q:
            raise TgrsError(f"rep {rep} out of range for {self!r}")
        return FieldElement(rep, self)

    def check(self, x: "FieldElement") -> None:
        if x.spec is not self and x.spec != self:
            raise FieldMismatch(f"element of {x.spec!r} used with {self!r}")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(r, self) for r in range(self.q)]

    @property
    def minus_one(self) -> int:
        return self.p - 1

    # -- table construction ------------------------------------------------
    def _digits(self, reps):
        reps = np.asarray(reps, dtype=np.int64)
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (reps[..., None] // weights) % self.p

    def _from_digits(self, digits):
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (np.asarray(digits, dtype=np.int64) * weights).sum(axis=-1)

    def _rep_to_poly(self, a: int) -> list[int]:
        return _trim([(a // self.p ** i) % self.p for i in range(self.m)])

    def _poly_to_rep(self, poly: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(poly))

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self._rep_to_poly(a), self._rep_to_poly(b), self.modulus, self.p)
        return self._poly_to_rep(prod)

    def _pow_slow(self, a: int, e: int) -> int:
        prod = _poly_powmod(self._rep_to_poly(a), e, self.modulus, self.p)
        return self._poly_to_rep(prod)

    def _mul_all_by(self, g: int) -> np.ndarray:
        """``g * x`` for every rep ``x``, by vectorised polynomial multiplication."""
        p, m = self.p, self.m
        xs = self._digits(np.arange(self.q))
        gd = [(g // p ** i) % p for i in range(m)]
        prod = np.zeros((self.q, 2 * m - 1), dtype=np.int64)
        for i, c in enumerate(gd):
            if c:
                prod[:, i:i + m] += c * xs
        prod %= p
        for d in range(2 * m - 2, m - 1, -1):
            lead = prod[:, d].copy()
            for i in range(m):
                prod[:, d - m + i] -= lead * self.modulus[i]
            prod[:, d] = 0
            prod %= p
        return self._from_digits(prod[:, :m])

    @functools.cached_property
    def _t(self) -> SimpleNamespace:
        q, p = self.q, self.p
        t = SimpleNamespace()
        if q == 2:
            gamma = 1
        else:
            order = q - 1
            factors = prime_factors(order)
            gamma = next(
                g for g in range(2, q)
                if all(self._pow_slow(g, order // r) != 1 for r in factors)
            )
        t.primitive = gamma
        times_gamma = self._mul_all_by(gamma).tolist() if q > 2 else [0, 1]
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = times_gamma[exp[i - 1]]
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        t.exp = np.array(exp + exp, dtype=np.int64)
        t.log = np.array(log, dtype=np.int64)
        t.exp_list = exp
        t.log_list = log
        reps = np.arange(q, dtype=np.int64)
        t.neg = self._from_digits((-self._digits(reps)) % p)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = t.exp[(q - 1 - t.log[1:]) % (q - 1)]
        t.inv = inv
        t.neg_list = t.neg.tolist()
        t.inv_list = inv.tolist()
        t.dense = q <= DENSE_TABLE_Q
        if t.dense:
            a = reps[:, None]
            b = reps[None, :]
            t.add_table = self._add_generic(a, b)
            mul = t.exp[t.log[a] + t.log[b]]
            mul[(a == 0) | (b == 0)] = 0
            t.mul_table = mul
            t.add_lists = t.add_table.tolist()
        return t

    # -- vectorised arithmetic on reps --------------------------------------
    def _add_generic(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._from_digits((self._digits(a) + self._digits(b)) % self.p)

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        t = self._t
        if t.dense:
            return t.add_table[a, b]
        return self._add_generic(a, b)

    def neg(self, a):
        return self._t.neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self._t
        if t.dense:
            return t.mul_table[a, b]
        out = t.exp[t.log[a] + t.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._t.inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        """Elementwise ``a**e``; ``0**0 == 1``, negative ``e`` inverts first."""
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            a = self.inv(a)
            e = -e
        if e == 0:
            return np.ones_like(a)
        t = self._t
        out = t.exp[(t.log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def sum(self, a, axis=None):
        """Field sum of an array of reps along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            if axis is None:
                return np.bitwise_xor.reduce(a, axis=None)
            return np.bitwise_xor.reduce(a, axis=axis)
        d = self._digits(a)
        if axis is None:
            return self._from_digits(d.reshape(-1, self.m).sum(axis=0) % self.p)
        axis = axis % a.ndim
        return self._from_digits(d.sum(axis=axis) % self.p)

    def prod(self, values: Iterable[int]) -> int:
        out = 1
        for v in values:
            out = self.mul1(out, v)
        return out

    # -- scalar (python int) arithmetic -------------------------------------
    def add1(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self._t
        if t.dense:
            return t.add_lists[a][b]
        return int(self._add_generic(np.int64(a), np.int64(b)))

    def neg1(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._t.neg_list[a]

    def sub1(self, a: int, b: int) -> int:
        return self.add1(a, self.neg1(b))

    def mul1(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self._t
        return t.exp_list[(t.log_list[a] + t.log_list[b]) % (self.q - 1)]

    def inv1(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._t.inv_list[a]

    def div1(self, a: int, b: int) -> int:
        return self.mul1(a, self.inv1(b))

    def pow1(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv1(a)
            e = -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        t = self._t
        return t.exp_list[(t.log_list[a] * e) % (self.q - 1)]

    def sqrt1(self, a: int) -> int | None:
        """Square root with the smaller rep, or ``None`` if ``a`` is a non-square."""
        if self.p == 2:
            return self.pow1(a, self.q // 2)
        table = self._sqrt_table
        r = int(table[a])
        return None if r < 0 else r

    @functools.cached_property
    def _sqrt_table(self) -> np.ndarray:
        # exhaustive: smallest root of every square
        reps = np.arange(self.q, dtype=np.int64)
        sq = self.mul(reps, reps)
        table = np.full(self.q, self.q, dtype=np.int64)
        np.minimum.at(table, sq, reps)
        table[table == self.q] = -1
        return table

    def chi1(self, a: int) -> int:
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd q")
        if a == 0:
            return 0
        return 1 if self.pow1(a, (self.q - 1) // 2) == 1 else -1


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated GF(p^m); ``modulus`` is ``m+1`` coefficients, constant term first.

    Without a modulus the lexicographically least irreducible polynomial is
    used (available for every ``p^m <= 2^16``).
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if m < 1:
        raise TgrsError(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        mod = default_modulus(p, m)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {m}: {list(modulus)}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return _cached_field(p, m, mod)


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m, modulus)


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``q=<p^m>`` or ``q=<p^m>,poly=<c0,c1,...,cm>``."""
    text = text.strip()
    poly = None
    if ",poly=" in text:
        head, tail = text.split(",poly=", 1)
        poly = [int(c) for c in tail.split(",") if c.strip()]
    else:
        head = text
    if not head.startswith("q="):
        raise TgrsError(f"bad field spec {text!r}; expected q=<p^m>[,poly=<c0,...,cm>]")
    return field_of_order(int(head[2:]), poly)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class FieldElement:
    rep: int
    spec: FieldSpec

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.spec.check(other)
            return other.rep
        if isinstance(other, (int, np.integer)):
            return int(other) % self.spec.q if self.spec.m == 1 else self.spec(other).rep
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.add1(self.rep, b), self.spec)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.sub1(self.rep, b), self.spec)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.sub1(b, self.rep), self.spec)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.mul1(self.rep, b), self.spec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.div1(self.rep, b), self.spec)

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec.div1(b, self.rep), self.spec)

    def __neg__(self):
        return FieldElement(self.spec.neg1(self.rep), self.spec)

    def __pow__(self, e: int):
        return FieldElement(self.spec.pow1(self.rep, int(e)), self.spec)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec.inv1(self.rep), self.spec)

    def __int__(self) -> int:
        return self.rep

    def __bool__(self) -> bool:
        return self.rep != 0

    def __repr__(self) -> str:
        return f"{self.spec!r}({self.rep})"


def _same(x: FieldElement, y: FieldElement) -> FieldSpec:
    if x.spec != y.spec:
        raise FieldMismatch(f"{x.spec!r} vs {y.spec!r}")
    return x.spec


def arith(op: str, x: FieldElement, y: FieldElement | None = None) -> FieldElement:
    """``op`` is one of ``add``, ``sub``, ``mul``, ``neg`` (``y`` unused for ``neg``)."""
    if op == "neg":
        return -x
    spec = _same(x, y)
    fn = {"add": spec.add1, "sub": spec.sub1, "mul": spec.mul1}[op]
    return FieldElement(fn(x.rep, y.rep), spec)


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def power(x: FieldElement, e: int) -> FieldElement:
    return x ** e


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Generator of the multiplicative group with the smallest rep."""
    return FieldElement(spec._t.primitive, spec)


def quadratic_character(x: FieldElement) -> int:
    return x.spec.chi1(x.rep)


def square_root(x: FieldElement) -> FieldElement | None:
    r = x.spec.sqrt1(x.rep)
    return None if r is None else FieldElement(r, x.spec)


def subfield_elements(spec: FieldSpec, sub_degree: int) -> list[FieldElement]:
    """Elements of the ``p^sub_degree`` subfield, ascending by rep."""
    if sub_degree < 1 or spec.m % sub_degree:
        raise NotASubfieldDegree(f"{sub_degree} does not divide {spec.m}")
    reps = np.arange(spec.q)
    fixed = reps[spec.power(reps, spec.p ** sub_degree) == reps]
    return [FieldElement(int(r), spec) for r in fixed]
