"""Small finite fields GF(p^h) with fixed Conway reduction polynomials.

Elements of GF(p^h) are encoded as integers 0..q-1: the integer whose base-p
digits are (c_0, c_1, ..., c_{h-1}) stands for c_0 + c_1*x + ... + c_{h-1}*x^{h-1}
modulo the reduction polynomial.  Arithmetic goes through precomputed q-by-q
numpy tables so that vectorized geometry code can use fancy indexing.

The reduction polynomials are hardcoded (Conway polynomials), so element
encodings, canonical forms and all derived indices are reproducible across
runs and machines.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_Q = 32

# Conway polynomials, ascending coefficients, monic of degree h.
# For h = 1 this is x - g with g the least primitive root mod p.
_CONWAY = {
    (2, 1): (1, 1),
    (3, 1): (1, 1),
    (5, 1): (3, 1),
    (7, 1): (4, 1),
    (11, 1): (9, 1),
    (13, 1): (11, 1),
    (17, 1): (14, 1),
    (19, 1): (17, 1),
    (23, 1): (18, 1),
    (29, 1): (27, 1),
    (31, 1): (28, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _digits(k, p, h):
    out = []
    for _ in range(h):
        out.append(k % p)
        k //= p
    return out


def _undigits(ds, p):
    k = 0
    for c in reversed(ds):
        k = k * p + c
    return k


def _poly_mul_mod(a, b, red, p):
    """Multiply coefficient lists a*b and reduce modulo the monic poly red."""
    h = len(red) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(len(prod) - 1, h - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(h + 1):
                prod[i - h + j] = (prod[i - h + j] - c * red[j]) % p
    prod = prod[:h] + [0] * max(0, h - len(prod))
    return prod[:h]


class Field:
    """GF(q) with table-driven arithmetic and optional conjugation x -> x^r."""

    def __init__(self, p, h):
        if not is_prime(p):
            raise ValueError(f"unsupported field: p={p} is not prime")
        q = p**h
        if h < 1 or q > MAX_Q or (p, h) not in _CONWAY:
            raise ValueError(f"unsupported field: q={p}^{h} has no hardcoded reduction polynomial")
        self.p = p
        self.h = h
        self.q = q
        self.poly = _CONWAY[(p, h)]
        # conjugation of order 2 exists iff h is even: x -> x^(p^(h/2))
        self.r = p ** (h // 2) if h % 2 == 0 else None

        red = list(self.poly)
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            da = _digits(a, p, h)
            for b in range(a, q):
                db = _digits(b, p, h)
                s = _undigits([(x + y) % p for x, y in zip(da, db)], p)
                m = _undigits(_poly_mul_mod(da, db, red, p), p)
                add[a, b] = add[b, a] = s
                mul[a, b] = mul[b, a] = m
        self.ADD = add
        self.MUL = mul
        neg = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            neg[a] = _undigits([(-c) % p for c in _digits(a, p, h)], p)
        self.NEG = neg
        self.SUB = add[:, neg]
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            row = mul[a]
            inv[a] = int(np.nonzero(row == 1)[0][0])
        self.INV = inv
        if self.r is not None:
            # x -> x^(p^(h/2)): apply the Frobenius x -> x^p h/2 times
            frob = np.zeros(q, dtype=np.uint8)
            for a in range(q):
                acc = a
                for _ in range(p - 1):
                    acc = int(mul[acc, a])
                frob[a] = acc
            conj = np.arange(q, dtype=np.uint8)
            for _ in range(h // 2):
                conj = frob[conj]
            self.CONJ = conj
        else:
            self.CONJ = None

    # scalar helpers (ints in, ints out)
    def add(self, a, b):
        return int(self.ADD[a, b])

    def sub(self, a, b):
        return int(self.SUB[a, b])

    def mul(self, a, b):
        return int(self.MUL[a, b])

    def neg(self, a):
        return int(self.NEG[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        return int(self.INV[a])

    def conj(self, a):
        if self.CONJ is None:
            raise ValueError(f"GF({self.q}) has no conjugation (odd extension degree)")
        return int(self.CONJ[a])

    def pow(self, a, k):
        out, base = 1, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def dot(self, u, v):
        acc = 0
        for a, b in zip(u, v):
            acc = int(self.ADD[acc, self.MUL[a, b]])
        return acc

    def scale(self, c, v):
        return tuple(int(self.MUL[c, x]) for x in v)

    def add_vec(self, u, v):
        return tuple(int(self.ADD[a, b]) for a, b in zip(u, v))

    def trace(self, a):
        """Absolute trace GF(q) -> GF(p)."""
        out, cur = 0, a
        for _ in range(self.h):
            out = self.add(out, cur)
            cur = self.pow(cur, self.p)
        return out

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_make(p, h=1):
    """Return the field GF(p^h) with its fixed reduction polynomial."""
    return Field(p, h)


@lru_cache(maxsize=None)
def field_for_order(q):
    """Return GF(q), factoring q as p^h."""
    for p in range(2, q + 1):
        if is_prime(p):
            h, t = 0, 1
            while t < q:
                t *= p
                h += 1
            if t == q:
                return field_make(p, h)
    raise ValueError(f"unsupported field: q={q} is not a prime power")
