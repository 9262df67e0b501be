"""Normal forms for the free metabelian algebra with the weakly-Novikov
identity only (no right symmetry imposed).

Basis monomials have the shape ``x_i L_{j1}..L_{jn} R_{k1}..R_{kt}``; for
n >= 4 the L-indices are only defined up to even permutations, so one
canonical representative per alternating-group orbit is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .fields import QQ
from .lincomb import LinComb
from .magma import Atom, MagmaPoly, Node
from .multisets import distinct_permutations, md_sub, md_total, sub_multisets


@dataclass(frozen=True, slots=True)
class WlcMonomial:
    base: int
    lpart: tuple[int, ...]
    rpart: tuple[int, ...]

    def __post_init__(self):
        if self.degree >= 2 and not self.lpart:
            raise ValueError("monomials of degree >= 2 must carry an L-part")
        if self.lpart != canonicalize_L(self.lpart):
            raise ValueError(f"L-part {self.lpart} is not canonical")

    @property
    def degree(self) -> int:
        return 1 + len(self.lpart) + len(self.rpart)

    def __repr__(self) -> str:
        s = f"x{self.base}"
        if self.lpart:
            s += " L[" + ",".join(f"x{j}" for j in self.lpart) + "]"
        if self.rpart:
            s += " R[" + ",".join(f"x{k}" for k in self.rpart) + "]"
        return s


def _inversions(seq: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return inv


def canonicalize_L(seq: Iterable[int]) -> tuple[int, ...]:
    """Canonical representative of an L-index sequence.

    Sequences shorter than 4 are free (returned unchanged).  From length 4
    on, even permutations of the sequence denote the same monomial: the
    even orbit is represented by the sorted sequence, the odd orbit by the
    sorted sequence with its last two entries transposed.  A repeated index
    merges the two orbits.
    """
    seq = tuple(seq)
    if len(seq) < 4:
        return seq
    s = tuple(sorted(seq))
    if len(set(seq)) < len(seq):
        return s
    if _inversions(seq) % 2 == 0:
        return s
    return s[:-2] + (s[-1], s[-2])


def _mono(base: int, lpart, rpart) -> WlcMonomial:
    return WlcMonomial(base, canonicalize_L(tuple(lpart)), tuple(rpart))


class WlcElement(LinComb):
    """Linear combination of canonical WlcMonomial keys."""

    @staticmethod
    def _key_order(m: WlcMonomial):
        return (m.degree, m.base, m.lpart, m.rpart)

    def __mul__(self, other: "WlcElement") -> "WlcElement":
        self._check(other)
        f = self.field
        out = WlcElement.zero(f)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                prod = wlc_mul(a, b, f)
                if not prod.is_zero():
                    out = out + prod.scaled(f.mul(ca, cb))
        return out


def gen(i: int, field=QQ) -> WlcElement:
    return WlcElement.basis(WlcMonomial(i, (), ()), field)


def wlc_mul(a: WlcMonomial, b: WlcMonomial, field=QQ) -> WlcElement:
    """Product of two basis monomials, per the multiplication table.

    Products not matching a table row are zero; in particular any product
    of two factors of degree >= 2.
    """
    da, db = a.degree, b.degree
    one = field.one
    if da == 1 and db == 1:
        # x_j * x_i = x_i L_{x_j}
        return WlcElement.basis(_mono(b.base, (a.base,), ()), field)
    if db == 1:
        # (any monomial of degree >= 2) * x_q appends R_q
        return WlcElement.basis(
            WlcMonomial(a.base, a.lpart, a.rpart + (b.base,)), field
        )
    if da == 1:
        if not b.rpart:
            # x_q * (pure-L monomial) appends L_q
            return WlcElement.basis(
                _mono(b.base, b.lpart + (a.base,), ()), field
            )
        if len(b.lpart) == 1 and len(b.rpart) == 1:
            # x_q * (x_i L_j R_k) = x_k L_i L_j L_q - x_k L_q L_i L_j
            q, (i,), (k,) = a.base, b.lpart, b.rpart
            i0 = b.base
            m1 = _mono(k, (i0, i, q), ())
            m2 = _mono(k, (q, i0, i), ())
            out = WlcElement({m1: one}, field) - WlcElement({m2: one}, field)
            return out
        return WlcElement.zero(field)
    return WlcElement.zero(field)


def wlc_eval(p: MagmaPoly) -> WlcElement:
    """Linear bottom-up evaluation of a magma polynomial in the table algebra."""
    field = p.field

    def eval_word(w) -> WlcElement:
        if isinstance(w, Atom):
            if w.kind != "x":
                raise ValueError(f"cannot evaluate formal variable {w!r}")
            return gen(w.index, field)
        l = eval_word(w.left)
        if l.is_zero():
            return l
        r = eval_word(w.right)
        return l * r

    out = WlcElement.zero(field)
    for w, c in p.terms.items():
        out = out + eval_word(w).scaled(c)
    return out


def _lpart_representatives(mult: Mapping[int, int]) -> list[tuple[int, ...]]:
    items: list[int] = []
    for g in sorted(mult):
        items.extend([g] * mult[g])
    n = len(items)
    if n < 4:
        return [tuple(p) for p in distinct_permutations(items)]
    s = tuple(sorted(items))
    if len(set(items)) < len(items):
        return [s]
    return [s, s[:-2] + (s[-1], s[-2])]


def wlc_basis(md: Mapping[int, int]) -> list[WlcMonomial]:
    """All canonical basis monomials of the given multidegree."""
    deg = md_total(md)
    if deg < 1:
        raise ValueError("total degree must be >= 1")
    out: list[WlcMonomial] = []
    if deg == 1:
        (g,) = md
        return [WlcMonomial(g, (), ())]
    for b in sorted(md):
        rest = md_sub(md, {b: 1})
        for lset in sub_multisets(rest):
            n = md_total(lset)
            if n < 1:
                continue
            rset = md_sub(rest, lset)
            ritems: list[int] = []
            for g in sorted(rset):
                ritems.extend([g] * rset[g])
            for lp in _lpart_representatives(lset):
                for rp in distinct_permutations(ritems):
                    out.append(WlcMonomial(b, lp, tuple(rp)))
    out.sort(key=WlcElement._key_order)
    return out
