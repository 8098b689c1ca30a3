"""Canonical-basis matrices of minuscule representations, and A(q).

In the canonical basis attached to a minuscule orbit, every root-vector
generator acts with coefficients 0 or 1: lowering by a simple root
follows the crystal edges, raising is its transpose, the Cartan
elements act diagonally by the coroot pairings, and raising by the
highest root contributes the single q-weighted block of

    A(q) = sum_j E-(j) + q * E_psi.

Matrices live over Poly, integer-coefficient polynomials in one formal
variable q with arbitrary-precision coefficients; nothing is ever
specialized numerically.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .rootsys import pair
from .weylorbit import Orbit

PolyLike = Union["Poly", int]


class Poly:
    """Sparse polynomial in q: a map from exponent to nonzero integer."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    if e < 0:
                        raise ValueError("negative exponents not supported")
                    c[e] = v
        self._c = c

    @classmethod
    def const(cls, v: int) -> "Poly":
        return cls({0: v})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "Poly":
        return cls({exp: coeff})

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._c.items()))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return max(self._c) if self._c else -1

    def _coerce(self, other: PolyLike) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return None

    def __add__(self, other: PolyLike) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, 0) + v
        return Poly(c)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: PolyLike) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: PolyLike) -> "Poly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return Poly(c)

    __rmul__ = __mul__

    def q_scaled(self, c: int) -> "Poly":
        """Substitute q -> c*q."""
        return Poly({e: v * c**e for e, v in self._c.items()})

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self.items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mon = str(abs(v))
            else:
                base = "q" if e == 1 else f"q^{e}"
                mon = base if abs(v) == 1 else f"{abs(v)}*{base}"
            parts.append(("-" if v < 0 else "+", mon))
        sign0, mon0 = parts[0]
        out = ("-" if sign0 == "-" else "") + mon0
        for sign, mon in parts[1:]:
            out += f" {sign} {mon}"
        return out

    __repr__ = __str__


ZERO = Poly()
ONE = Poly.const(1)
Q = Poly.term(1, 1)


class PolyMatrix:
    """Square matrix over Poly with sparse storage.

    ``basis`` optionally records the labels of the rows/columns (the
    orbit's canonical weight order for representation matrices, index
    sets for wedge matrices); arithmetic keeps it when both operands
    agree and drops it otherwise.
    """

    __slots__ = ("n", "_e", "basis")

    def __init__(
        self,
        n: int,
        entries: Optional[Mapping[tuple[int, int], PolyLike]] = None,
        basis: Optional[tuple] = None,
    ):
        self.n = n
        e: dict[tuple[int, int], Poly] = {}
        if entries:
            for (i, j), v in entries.items():
                if not 0 <= i < n or not 0 <= j < n:
                    raise ValueError(f"entry ({i},{j}) outside a {n}x{n} matrix")
                p = v if isinstance(v, Poly) else Poly.const(v)
                if p:
                    e[(i, j)] = p
        self._e = e
        self.basis = basis

    @classmethod
    def zero(cls, n: int, basis: Optional[tuple] = None) -> "PolyMatrix":
        return cls(n, None, basis)

    @classmethod
    def identity(cls, n: int, basis: Optional[tuple] = None) -> "PolyMatrix":
        return cls(n, {(i, i): 1 for i in range(n)}, basis)

    def entry(self, i: int, j: int) -> Poly:
        return self._e.get((i, j), ZERO)

    def nonzero(self) -> list[tuple[int, int, Poly]]:
        return [(i, j, p) for (i, j), p in sorted(self._e.items())]

    def rows(self) -> list[list[Poly]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def with_entry(self, i: int, j: int, value: PolyLike) -> "PolyMatrix":
        e = dict(self._e)
        p = value if isinstance(value, Poly) else Poly.const(value)
        if p:
            e[(i, j)] = p
        else:
            e.pop((i, j), None)
        return PolyMatrix(self.n, e, self.basis)

    def _merged_basis(self, other: "PolyMatrix") -> Optional[tuple]:
        return self.basis if self.basis == other.basis else None

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        e = dict(self._e)
        for k, p in other._e.items():
            s = e.get(k, ZERO) + p
            if s:
                e[k] = s
            else:
                e.pop(k, None)
        return PolyMatrix(self.n, e, self._merged_basis(other))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scaled(-1)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        rows_a: dict[int, list[tuple[int, Poly]]] = {}
        for (i, k), p in self._e.items():
            rows_a.setdefault(i, []).append((k, p))
        cols_b: dict[int, list[tuple[int, Poly]]] = {}
        for (k, j), p in other._e.items():
            cols_b.setdefault(k, []).append((j, p))
        acc: dict[tuple[int, int], Poly] = {}
        for i, row in rows_a.items():
            for k, pa in row:
                for j, pb in cols_b.get(k, ()):
                    key = (i, j)
                    cur = acc.get(key)
                    acc[key] = pa * pb if cur is None else cur + pa * pb
        return PolyMatrix(self.n, acc, self._merged_basis(other))

    def scaled(self, c: PolyLike) -> "PolyMatrix":
        p = c if isinstance(c, Poly) else Poly.const(c)
        return PolyMatrix(self.n, {k: v * p for k, v in self._e.items()}, self.basis)

    def q_scaled(self, c: int) -> "PolyMatrix":
        """Substitute q -> c*q in every entry."""
        return PolyMatrix(self.n, {k: v.q_scaled(c) for k, v in self._e.items()}, self.basis)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.n, {(j, i): p for (i, j), p in self._e.items()}, self.basis)

    def is_zero(self) -> bool:
        return not self._e

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and self._e == other._e

    def __repr__(self) -> str:
        return f"PolyMatrix(n={self.n}, nnz={len(self._e)})"


def commutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a * b - b * a


def char_poly(m: PolyMatrix) -> tuple[Poly, ...]:
    """Coefficients of det(x I - M), leading first, by the Berkowitz method.

    Division-free, so it works verbatim over the polynomial ring;
    returns n+1 Poly values c with det(xI - M) = sum c[k] x^(n-k).
    """
    return tuple(_berkowitz([list(r) for r in m.rows()]))


def _berkowitz(rows: list[list[Poly]]) -> list[Poly]:
    n = len(rows)
    if n == 0:
        return [ONE]
    if n == 1:
        return [ONE, -rows[0][0]]
    a = rows[0][0]
    r_vec = rows[0][1:]
    c_vec = [rows[k][0] for k in range(1, n)]
    sub = [row[1:] for row in rows[1:]]

    items = [ONE, -a]
    v = r_vec
    for _ in range(n - 1):
        items.append(-sum((vi * ci for vi, ci in zip(v, c_vec)), ZERO))
        v = [sum((vi * sub[k][j] for k, vi in enumerate(v)), ZERO) for j in range(n - 1)]

    prev = _berkowitz(sub)
    out = []
    for r in range(n + 1):
        acc = ZERO
        for c in range(n):
            k = r - c
            if 0 <= k <= n:
                acc = acc + items[k] * prev[c]
        out.append(acc)
    return out


# -- canonical-basis generators ----------------------------------------------


def lowering_matrix(orb: Orbit, j: int) -> PolyMatrix:
    """E-(j): entry (target, source) = 1 for each crystal edge labelled j."""
    if not 1 <= j <= orb.rs.rank:
        raise ValueError(f"simple root index {j} out of range")
    entries = {}
    alpha_w = orb.rs.simple_root_weights[j - 1]
    for pos, el in enumerate(orb.elements):
        if el.weight.pairings[j - 1] == 1:
            entries[(orb.index_of[el.weight - alpha_w], pos)] = 1
    return PolyMatrix(orb.size, entries, _orbit_basis(orb))


def raising_matrix(orb: Orbit, j: int) -> PolyMatrix:
    """E+(j): entry (mu + alpha_j, mu) = 1 exactly when (mu, alpha_j^vee) = -1."""
    if not 1 <= j <= orb.rs.rank:
        raise ValueError(f"simple root index {j} out of range")
    entries = {}
    alpha_w = orb.rs.simple_root_weights[j - 1]
    for pos, el in enumerate(orb.elements):
        if el.weight.pairings[j - 1] == -1:
            entries[(orb.index_of[el.weight + alpha_w], pos)] = 1
    return PolyMatrix(orb.size, entries, _orbit_basis(orb))


def cartan_action(orb: Orbit, j: int) -> PolyMatrix:
    """H(j): diagonal of coroot pairings, entries in {-1, 0, 1}."""
    if not 1 <= j <= orb.rs.rank:
        raise ValueError(f"simple root index {j} out of range")
    entries = {
        (pos, pos): el.weight.pairings[j - 1]
        for pos, el in enumerate(orb.elements)
        if el.weight.pairings[j - 1]
    }
    return PolyMatrix(orb.size, entries, _orbit_basis(orb))


def psi_raising_matrix(orb: Orbit) -> PolyMatrix:
    """E_psi: entry (mu + psi, mu) = 1 exactly when (mu, psi^vee) = -1."""
    rs = orb.rs
    psi = rs.highest_root
    psi_w = rs.highest_root_weight
    entries = {}
    for pos, el in enumerate(orb.elements):
        if pair(rs, el.weight, psi) == -1:
            target = el.weight + psi_w
            assert target in orb.index_of, "mu + psi must stay in the orbit"
            entries[(orb.index_of[target], pos)] = 1
    return PolyMatrix(orb.size, entries, _orbit_basis(orb))


def quantum_operator(orb: Orbit) -> PolyMatrix:
    """A(q) = sum_j E-(j) + q E_psi in the canonical basis."""
    total = psi_raising_matrix(orb).scaled(Q)
    for j in range(1, orb.rs.rank + 1):
        total = total + lowering_matrix(orb, j)
    return total


def _orbit_basis(orb: Orbit) -> tuple:
    return tuple(el.weight for el in orb.elements)


@dataclass
class RelationReport:
    """Outcome of the structural bracket checks on one orbit."""

    ok: bool
    checks: int
    failure: Optional[str] = None


def verify_rep_relations(orb: Orbit) -> RelationReport:
    """Check the sl2-triple and Serre-type brackets of all generators.

    [E+(j), E-(j)] = H(j); [E+(j), E-(k)] = 0 for j != k;
    [H(j), E-(k)] = -a[j][k] E-(k); [H(j), E+(k)] = a[j][k] E+(k);
    [E+(j), E_psi] = 0 since psi + alpha_j is never a root.
    Stops at the first failing relation.
    """
    rs = orb.rs
    n = rs.rank
    C = rs.cartan_data.cartan
    low = {j: lowering_matrix(orb, j) for j in range(1, n + 1)}
    high = {j: raising_matrix(orb, j) for j in range(1, n + 1)}
    diag = {j: cartan_action(orb, j) for j in range(1, n + 1)}
    psi_m = psi_raising_matrix(orb)

    checks = 0

    def fail(msg: str) -> RelationReport:
        return RelationReport(False, checks, msg)

    for j in range(1, n + 1):
        checks += 1
        if commutator(high[j], low[j]) != diag[j]:
            return fail(f"[E+({j}), E-({j})] != H({j})")
        for k in range(1, n + 1):
            if k != j:
                checks += 1
                if not commutator(high[j], low[k]).is_zero():
                    return fail(f"[E+({j}), E-({k})] != 0")
            checks += 2
            a_jk = C[j - 1][k - 1]
            if commutator(diag[j], low[k]) != low[k].scaled(-a_jk):
                return fail(f"[H({j}), E-({k})] != -a[{j}][{k}] E-({k})")
            if commutator(diag[j], high[k]) != high[k].scaled(a_jk):
                return fail(f"[H({j}), E+({k})] != a[{j}][{k}] E+({k})")
        checks += 1
        if not commutator(high[j], psi_m).is_zero():
            return fail(f"[E+({j}), E_psi] != 0")
    return RelationReport(True, checks)
