"""Vectorised arithmetic on whole finite fields.

Elements are numpy int64 arrays of integer codes. Multiplication goes
through discrete-log tables, addition through the Zech logarithm
Z(i) = log(1 + g^i), so every operation is a handful of gathers.
"""

from __future__ import annotations

import math

import numpy as np


class FieldTables:
    def __init__(self, field):
        self.field = field
        p, k = field.p, field.k
        self.p, self.k = p, k
        self.order = Q = field.order
        self.M = M = Q - 1
        self.pows = np.array([p**i for i in range(k)], dtype=np.int64)
        self.generator = g = field.primitive_element()

        # matrix of multiplication by g in the digit basis
        mat = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            mat[:, i] = field.digits(field.mul(g, p**i))

        exp = np.empty(M, dtype=np.int64)
        block = max(1, math.isqrt(M))
        cols = np.empty((k, block), dtype=np.int64)
        v = np.zeros(k, dtype=np.int64)
        v[0] = 1
        for j in range(block):
            cols[:, j] = v
            v = mat @ v % p
        step = _matpow(mat, block, p)
        for start in range(0, M, block):
            stop = min(start + block, M)
            exp[start:stop] = self.pows @ cols[:, : stop - start]
            cols = step @ cols % p
        self.exp = exp
        log = np.full(Q, -1, dtype=np.int64)
        log[exp] = np.arange(M, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        self.log = log

        # 1 + g^i: add one to the lowest digit
        low = exp % p
        one_plus = np.where(low == p - 1, exp - (p - 1), exp + 1)
        self.zech = log[one_plus]
        self.half = M // 2 if p != 2 else 0  # log(-1)

        chi = np.zeros(Q, dtype=np.int8)
        chi[1:] = np.where(log[1:] % 2 == 0, 1, -1) if p != 2 else 1
        self.chi2 = chi

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % self.M]
        return np.where((a == 0) | (b == 0), 0, out)

    def scale(self, c: int, a):
        """Multiply an array by a scalar field element."""
        a = np.asarray(a, dtype=np.int64)
        if c == 0:
            return np.zeros_like(a)
        lc = int(self.log[c])
        return np.where(a == 0, 0, self.exp[(self.log[a] + lc) % self.M])

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return np.where(a == 0, 0, self.exp[(self.log[a] + self.half) % self.M])

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % self.M]
        out = np.where(z < 0, 0, self.exp[(la + z) % self.M])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def add_scalar(self, a, c: int):
        return self.add(a, np.full(np.shape(a), c, dtype=np.int64))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, self.exp[(self.log[a] * e) % self.M])

    def evaluate(self, coeffs, x):
        """Horner evaluation of a polynomial with scalar coefficients at every x."""
        x = np.asarray(x, dtype=np.int64)
        acc = np.zeros_like(x)
        for c in reversed(list(coeffs)):
            acc = self.mul(acc, x)
            if c:
                acc = self.add_scalar(acc, c)
        return acc

    def digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        out = np.empty(a.shape + (self.k,), dtype=np.int64)
        for i in range(self.k):
            a, out[..., i] = np.divmod(a, self.p)
        return out


def _matpow(mat: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(mat.shape[0], dtype=np.int64)
    base = mat.copy()
    while e:
        if e & 1:
            result = result @ base % p
        e >>= 1
        if e:
            base = base @ base % p
    return result
