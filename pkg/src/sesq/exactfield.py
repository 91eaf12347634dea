"""Exact field arithmetic: prime fields F_p, extensions F_{p^n}, and Q.

Element payloads are plain Python values so that equality is structural:

* prime field      -- int in [0, p)
* extension field  -- tuple of ints of length deg (coefficients low-to-high)
* rationals        -- fractions.Fraction (always in lowest terms)

All operations are pure; contexts and elements are immutable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (BadDescriptor, ContextMismatch, DivisionByZero,
                     NoEmbedding, NotPrime, ReducibleModulus)


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p: tuples low-to-high, trimmed of trailing zeros
# ---------------------------------------------------------------------------

def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pdivmod(a, b, p):
    # b must be nonzero
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    ilb = pow(lb, p - 2, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        coef = (a[-1] * ilb) % p
        q[da - db] = coef
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
        a.pop()
    return _ptrim(q), _ptrim(a)


def _all_monic(p, deg):
    # monic polynomials of exact degree deg, ascending lexicographic in the
    # low coefficients (constant term most significant)
    n = p ** deg
    for idx in range(n):
        coeffs = []
        v = idx
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        yield tuple(coeffs) + (1,)


def _poly_irreducible(mod, p):
    """Exhaustive trial division by all monic factors of degree <= deg/2."""
    deg = len(mod) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _all_monic(p, d):
            _, rem = _pdivmod(mod, cand, p)
            if not rem:
                return False
    return True


def find_irreducible(p, deg):
    """Lexicographically first monic irreducible of the given degree over F_p."""
    for cand in _all_monic(p, deg):
        if _poly_irreducible(cand, p):
            return [cand[i] if i < len(cand) else 0 for i in range(deg + 1)]
    raise ReducibleModulus(f"no irreducible of degree {deg} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# field contexts
# ---------------------------------------------------------------------------

class Field:
    """Common interface of the three exact field contexts."""

    kind = None
    char = None
    order = None  # int, or None meaning infinite

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero

    def scale(self, c, vec):
        return [self.mul(c, v) for v in vec]

    def descriptor(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor() == other.descriptor()

    def __hash__(self):
        import json
        return hash(json.dumps(self.descriptor(), sort_keys=True))

    def __repr__(self):
        return f"Field({self.descriptor()})"

    # finite-field only; infinite contexts raise
    def elements(self):
        from .errors import InfiniteField
        raise InfiniteField("field has infinitely many elements")

    def sample(self, rng):
        raise NotImplementedError


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return list(range(self.p))

    def sample(self, rng):
        return rng.randrange(self.p)

    def el_to_json(self, a):
        return str(a)

    def el_from_json(self, s):
        return int(s) % self.p

    def descriptor(self):
        return {"kind": "prime", "p": self.p}


class ExtField(Field):
    kind = "ext"

    def __init__(self, p, deg, modulus):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if deg < 2:
            raise BadDescriptor("extension degree must be >= 2")
        mod = [c % p for c in modulus]
        if len(mod) != deg + 1 or mod[-1] != 1:
            raise BadDescriptor("modulus must be monic of length deg+1")
        if not _poly_irreducible(tuple(mod), p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.deg = deg
        self.modulus = tuple(mod)
        self.char = p
        self.order = p ** deg
        self.zero = (0,) * deg
        self.one = (1,) + (0,) * (deg - 1)

    def _reduce(self, poly):
        _, rem = _pdivmod(poly, self.modulus, self.p)
        return tuple(rem) + (0,) * (self.deg - len(rem))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        return self._reduce(_pmul(_ptrim(a), _ptrim(b), self.p))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def inv(self, a):
        if all(x == 0 for x in a):
            raise DivisionByZero("inverse of zero")
        # extended Euclid in F_p[x]
        r0, r1 = self.modulus, _ptrim(a)
        t0, t1 = (), (1,)
        while r1:
            q, r = _pdivmod(r0, r1, self.p)
            r0, r1 = r1, r
            t0, t1 = t1, _padd(t0, _pmul(tuple((-c) % self.p for c in q), t1, self.p), self.p)
        # r0 is a nonzero constant gcd
        c = pow(r0[0], self.p - 2, self.p)
        t0 = _pmul((c,), t0, self.p)
        return tuple(t0) + (0,) * (self.deg - len(t0))

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.deg - 1)

    def elements(self):
        out = []
        for idx in range(self.order):
            coeffs, v = [], idx
            for _ in range(self.deg):
                coeffs.append(v % self.p)
                v //= self.p
            out.append(tuple(coeffs))
        return out

    def sample(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.deg))

    def el_to_json(self, a):
        return [str(x) for x in a]

    def el_from_json(self, s):
        if not isinstance(s, list) or len(s) != self.deg:
            raise BadDescriptor(f"extension element must be a list of {self.deg} strings")
        return tuple(int(x) % self.p for x in s)

    def descriptor(self):
        return {"kind": "ext", "p": self.p, "deg": self.deg, "mod": list(self.modulus)}


class RationalField(Field):
    kind = "rational"

    def __init__(self):
        self.char = 0
        self.order = None
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def sample(self, rng):
        return Fraction(rng.randrange(-9, 10), rng.randrange(1, 10))

    def el_to_json(self, a):
        return f"{a.numerator}/{a.denominator}"

    def el_from_json(self, s):
        if isinstance(s, str) and "/" in s:
            num, den = s.split("/", 1)
            if int(den) == 0:
                raise DivisionByZero("zero denominator")
            return Fraction(int(num), int(den))
        return Fraction(int(s))

    def descriptor(self):
        return {"kind": "rational"}


# ---------------------------------------------------------------------------
# spec operations
# ---------------------------------------------------------------------------

def field_make(spec):
    """Build a validated field context from a descriptor dict."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise BadDescriptor(f"bad field descriptor: {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "prime":
            return PrimeField(int(spec["p"]))
        if kind == "ext":
            return ExtField(int(spec["p"]), int(spec["deg"]), [int(c) for c in spec["mod"]])
        if kind == "rational":
            return RationalField()
    except (KeyError, TypeError, ValueError) as e:
        raise BadDescriptor(f"bad field descriptor: {spec!r}") from e
    raise BadDescriptor(f"unknown field kind: {kind!r}")


def field_embed(src, dst, x):
    """Ring-homomorphic embedding of x from src into dst.

    Supported: identity on any context, and F_p into F_{p^d}.
    """
    if src == dst:
        return x
    if src.kind == "prime" and dst.kind == "ext" and src.p == dst.p:
        return dst.from_int(x)
    raise NoEmbedding(f"no embedding {src.descriptor()} -> {dst.descriptor()}")


def field_arith(op, ctx, x, y=None):
    """Uniform entry point for exact field arithmetic on payload values."""
    if op == "add":
        return ctx.add(x, y)
    if op == "mul":
        return ctx.mul(x, y)
    if op == "neg":
        return ctx.neg(x)
    if op == "inv":
        return ctx.inv(x)
    if op == "eq":
        return x == y
    raise ContextMismatch(f"unknown field operation {op!r}")
