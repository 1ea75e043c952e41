"""Exact arithmetic in Z[zeta_m], reduced modulo the m-th cyclotomic polynomial.

An element is a coefficient vector of length deg(Phi_m) in the power basis
1, zeta, ..., zeta^(d-1).  Products are folded modulo x^m - 1 first (Phi_m
divides it) and then mapped through a precomputed table of x^k mod Phi_m, so
every stored vector is the canonical reduced form and equality is decisive.
"""
from __future__ import annotations

import cmath
from functools import lru_cache

import numpy as np
from sympy import Poly, Symbol, cyclotomic_poly

_X = Symbol("x")
_INT64_SAFE = 1 << 62


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> np.ndarray:
    """Row k holds x^k mod Phi_m, for 0 <= k < m."""
    phi = [int(c) for c in reversed(Poly(cyclotomic_poly(m, _X), _X).all_coeffs())]
    d = len(phi) - 1
    table = np.zeros((m, d), dtype=np.int64)
    cur = [0] * d
    cur[0] = 1
    for k in range(m):
        table[k] = cur
        # multiply by x, then eliminate x^d using the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return table


def degree(m: int) -> int:
    return _reduction_table(m).shape[1]


def _reduce_folded(m: int, folded: np.ndarray) -> np.ndarray:
    table = _reduction_table(m)
    bound = int(np.abs(folded).max(initial=0)) * int(np.abs(table).max(initial=0)) * m
    if folded.dtype != object and bound < _INT64_SAFE:
        return folded.astype(np.int64) @ table
    return folded.astype(object) @ table.astype(object)


class CycloInt:
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = np.asarray(coeffs)

    @classmethod
    def from_exponent_counts(cls, m: int, counts) -> CycloInt:
        """sum_k counts[k] zeta^k for a length-m count vector."""
        return cls(m, _reduce_folded(m, np.asarray(counts)))

    @classmethod
    def from_exponents(cls, m: int, exps) -> CycloInt:
        exps = np.asarray(exps, dtype=np.int64) % m
        return cls.from_exponent_counts(m, np.bincount(exps, minlength=m))

    @classmethod
    def monomial(cls, m: int, k: int, c: int = 1) -> CycloInt:
        dtype = np.int64 if abs(c) < _INT64_SAFE else object
        counts = np.zeros(m, dtype=dtype)
        counts[k % m] = c
        return cls.from_exponent_counts(m, counts)

    @classmethod
    def integer(cls, m: int, c: int) -> CycloInt:
        return cls.monomial(m, 0, c)

    def _check(self, other) -> CycloInt:
        if isinstance(other, int):
            return CycloInt.integer(self.m, other)
        if other.m != self.m:
            raise ValueError(f"mixing cyclotomic orders {self.m} and {other.m}")
        return other

    def __add__(self, other) -> CycloInt:
        other = self._check(other)
        return CycloInt(self.m, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self) -> CycloInt:
        return CycloInt(self.m, -self.coeffs)

    def __sub__(self, other) -> CycloInt:
        return self + (-self._check(other))

    def __mul__(self, other) -> CycloInt:
        if isinstance(other, int):
            a = self.coeffs
            if a.dtype != object and int(np.abs(a).max(initial=0)) * abs(other) >= _INT64_SAFE:
                a = a.astype(object)
            return CycloInt(self.m, a * other)
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * len(a)
        if a.dtype == object or b.dtype == object or bound >= _INT64_SAFE:
            prod = np.convolve(a.astype(object), b.astype(object))
        else:
            prod = np.convolve(a, b)
        folded = np.zeros(self.m, dtype=prod.dtype)
        for start in range(0, len(prod), self.m):
            chunk = prod[start:start + self.m]
            folded[: len(chunk)] += chunk
        return CycloInt(self.m, _reduce_folded(self.m, folded))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycloInt:
        acc = CycloInt.integer(self.m, 1)
        for _ in range(e):
            acc = acc * self
        return acc

    def galois(self, k: int) -> CycloInt:
        """Image under zeta -> zeta^k (k coprime to m)."""
        counts = np.zeros(self.m, dtype=self.coeffs.dtype)
        for i, c in enumerate(self.coeffs):
            counts[(i * k) % self.m] += c
        return CycloInt(self.m, _reduce_folded(self.m, counts))

    def lift(self, m2: int) -> CycloInt:
        """Embed into Z[zeta_m2] for a multiple m2 of m (zeta_m = zeta_m2^(m2/m))."""
        if m2 % self.m:
            raise ValueError(f"{self.m} does not divide {m2}")
        step = m2 // self.m
        counts = np.zeros(m2, dtype=self.coeffs.dtype)
        for i, c in enumerate(self.coeffs):
            counts[i * step] += c
        return CycloInt(m2, _reduce_folded(m2, counts))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return complex(sum(int(c) * z**i for i, c in enumerate(self.coeffs)))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloInt.integer(self.m, other)
        if not isinstance(other, CycloInt) or other.m != self.m:
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.m, tuple(int(c) for c in self.coeffs)))

    def __repr__(self) -> str:
        return f"CycloInt(m={self.m}, {[int(c) for c in self.coeffs]})"
