"""Brute-force T-ideal oracle.

For a set of polynomial identities and a target multidegree, builds the
sparse exact matrix of all identity consequences lying in that component
(disjoint-block substitutions of bracketed words, wrapped in one-hole
bracketed contexts) and computes dimensions, bases, and membership by
exact elimination: fraction-free integer pivoting over Q, modular
elimination over GF(p).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

from .fields import GF, QQ, PrimeField, Rationals
from .magma import (
    Atom,
    MagmaPoly,
    MagmaWord,
    associator,
    enumerate_words,
    is_multilinear,
    leaves,
    multidegree,
    poly_variables,
    replace_leaves,
    substitute,
    v,
)
from .multisets import md_total, ordered_partitions

DEFAULT_DEGREE_CAP = 6

_HOLE = Atom("x", 0)  # generator index 0 is reserved for context holes


class DegreeCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class IdentitySet:
    """A named set of polynomial identities over formal variables (= 0 each)."""

    name: str
    identities: tuple[MagmaPoly, ...]

    def union(self, other: "IdentitySet", name: str | None = None) -> "IdentitySet":
        return IdentitySet(
            name or f"{self.name}+{other.name}",
            self.identities + other.identities,
        )


# -- identity presets --------------------------------------------------


def _rs() -> MagmaPoly:
    return associator(v(1), v(2), v(3)) - associator(v(1), v(3), v(2))


def _wn() -> MagmaPoly:
    return v(1) * associator(v(2), v(3), v(4)) - associator(v(2), v(3), v(1) * v(4))


def _lc() -> MagmaPoly:
    return v(1) * (v(2) * v(3)) - v(2) * (v(1) * v(3))


def _met() -> MagmaPoly:
    return (v(1) * v(2)) * (v(3) * v(4))


def _flex() -> MagmaPoly:
    # full linearization of (x,y,x) = 0, valid away from characteristic 2
    return associator(v(1), v(2), v(3)) + associator(v(3), v(2), v(1))


def _antiflex() -> MagmaPoly:
    return associator(v(1), v(2), v(3)) - associator(v(3), v(2), v(1))


def _op_chain(n: int, sign: int) -> MagmaPoly:
    # (v1 v2) followed by n-1 operators H (sign=-1) or Theta (sign=+1)
    w = v(1) * v(2)
    for i in range(3, n + 2):
        w = w * v(i) + (v(i) * w).scaled(sign)
    return w


def _weak_flex(sign: int) -> MagmaPoly:
    return associator(v(1) * v(2), v(3), v(4)) - associator(
        v(4), v(3), v(1) * v(2)
    ).scaled(sign)


_SIMPLE_PRESETS = {
    "rs": lambda: [_rs()],
    "wn": lambda: [_wn()],
    "lc": lambda: [_lc()],
    "met": lambda: [_met()],
    "flex": lambda: [_flex()],
    "antiflex": lambda: [_antiflex()],
    "wlc2": lambda: [_wn(), _met()],
    "wnov2": lambda: [_rs(), _wn(), _met()],
    "nov2": lambda: [_rs(), _wn(), _lc(), _met()],
}


def preset(name: str) -> IdentitySet:
    """Build a preset identity set; ``+`` combines presets.

    Parameterized presets: ``lie-nilp:n``, ``jordan-nilp:n``,
    ``weak-flex:+`` / ``weak-flex:-``.
    """
    # "weak-flex:+" contains the combiner character; shield it while splitting
    shielded = name.replace("weak-flex:+", "weak-flex:pos")
    parts = [p.strip().replace("weak-flex:pos", "weak-flex:+")
             for p in shielded.split("+") if p.strip()]
    if len(parts) > 1:
        out = preset(parts[0])
        for p in parts[1:]:
            out = out.union(preset(p), name=name)
        return IdentitySet(name, out.identities)
    key = parts[0]
    if key in _SIMPLE_PRESETS:
        return IdentitySet(key, tuple(_SIMPLE_PRESETS[key]()))
    if key.startswith("lie-nilp:"):
        n = int(key.split(":")[1])
        return IdentitySet(key, (_op_chain(n, -1),))
    if key.startswith("jordan-nilp:"):
        n = int(key.split(":")[1])
        return IdentitySet(key, (_op_chain(n, +1),))
    if key == "weak-flex:+":
        return IdentitySet(key, (_weak_flex(+1),))
    if key == "weak-flex:-":
        return IdentitySet(key, (_weak_flex(-1),))
    raise ValueError(f"unknown identity preset {name!r}")


def load_identity_file(path: str) -> IdentitySet:
    """Read an identity set file: one ``<expr over v-vars> = 0`` per line."""
    from .exprs import parse_identity

    ids = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            ids.append(parse_identity(line))
    if not ids:
        raise ValueError(f"no identities found in {path}")
    return IdentitySet(path, tuple(ids))


# -- linearization -----------------------------------------------------


def _var_multidegree(f: MagmaPoly) -> dict[int, int]:
    md: dict[int, int] | None = None
    for w in f.terms:
        cur: dict[int, int] = {}
        for a in leaves(w):
            if a.kind == "v":
                cur[a.index] = cur.get(a.index, 0) + 1
        if md is None:
            md = cur
        elif md != cur:
            raise ValueError("identity is not multihomogeneous in its variables")
    if md is None:
        raise ValueError("zero identity")
    return md


def linearize(f: MagmaPoly) -> MagmaPoly:
    """Full multilinearization of a multihomogeneous identity.

    Variables are renumbered to v1..vn.  Over Q (or GF(p) with p larger
    than the degree) the multilinear consequences are unchanged.
    """
    vmd = _var_multidegree(f)
    if all(m == 1 for m in vmd.values()):
        ren = {k: i + 1 for i, k in enumerate(sorted(vmd))}
        out = MagmaPoly.zero(f.field)
        for w, c in f.terms.items():
            mapping = {Atom("v", k): Atom("v", r) for k, r in ren.items()}
            out = out + MagmaPoly.word(replace_leaves(w, mapping), f.field).scaled(c)
        return out
    fresh: dict[int, list[int]] = {}
    nxt = 1
    for k in sorted(vmd):
        fresh[k] = list(range(nxt, nxt + vmd[k]))
        nxt += vmd[k]
    assignment = {}
    for k, idxs in fresh.items():
        s = v(idxs[0], f.field)
        for i in idxs[1:]:
            s = s + v(i, f.field)
        assignment[k] = s
    expanded = substitute(f, assignment)
    allvars = tuple(range(1, nxt))
    out = MagmaPoly.zero(f.field)
    for w, c in expanded.terms.items():
        seen: dict[int, int] = {}
        for a in leaves(w):
            if a.kind == "v":
                seen[a.index] = seen.get(a.index, 0) + 1
        if tuple(sorted(seen)) == allvars and all(m == 1 for m in seen.values()):
            out = out + MagmaPoly({w: c}, f.field)
    if out.is_zero():
        raise ValueError("identity linearizes to zero")
    return out


# -- relation matrix ---------------------------------------------------


@dataclass
class RelationMatrix:
    words: list[MagmaWord]
    rows: list[tuple[tuple[int, object], ...]]  # sparse (col, coeff), sorted
    field: object

    @property
    def ncols(self) -> int:
        return len(self.words)

    @property
    def nrows(self) -> int:
        return len(self.rows)


def _normalize_row(row: dict[int, object], field) -> tuple[tuple[int, object], ...]:
    items = sorted(row.items())
    if isinstance(field, Rationals):
        den = lcm(*(c.denominator for _, c in items)) if items else 1
        ints = [(col, int(c * den)) for col, c in items]
        g = 0
        for _, c in ints:
            g = gcd(g, c)
        if ints[0][1] < 0:
            g = -g
        return tuple((col, c // g) for col, c in ints)
    inv = field.inv(items[0][1])
    return tuple((col, field.mul(c, inv)) for col, c in items)


def relation_rows(ids: IdentitySet, md: Mapping[int, int], field=QQ,
                  cap: int = DEFAULT_DEGREE_CAP) -> RelationMatrix:
    """All T-ideal consequence rows of ``ids`` in the ``md`` component."""
    n = md_total(md)
    if n > cap:
        raise DegreeCapExceeded(f"degree {n} exceeds cap {cap}")
    if 0 in md:
        raise ValueError("generator index 0 is reserved")
    words = enumerate_words(md)
    colindex = {w: i for i, w in enumerate(words)}
    seen: set[tuple[tuple[int, object], ...]] = set()
    rows: list[tuple[tuple[int, object], ...]] = []
    word_cache: dict[tuple[tuple[int, int], ...], list[MagmaWord]] = {}

    def words_of(sub_md: Mapping[int, int]) -> list[MagmaWord]:
        key = tuple(sorted(sub_md.items()))
        if key not in word_cache:
            word_cache[key] = enumerate_words(sub_md)
        return word_cache[key]

    for f in ids.identities:
        f = linearize(f)
        vs = poly_variables(f)
        m = len(vs)
        if m > n:
            continue
        fterms = [(w, field.coerce(c)) for w, c in f.terms.items()]
        for blocks, rest in ordered_partitions(md, m):
            block_words = [words_of(b) for b in blocks]
            if rest:
                contexts = words_of({**rest, 0: 1})
            else:
                contexts = [_HOLE]
            for combo in itertools.product(*block_words):
                mapping = {Atom("v", vs[i]): combo[i] for i in range(m)}
                subbed = [(replace_leaves(wf, mapping), c) for wf, c in fterms]
                for ctx in contexts:
                    row: dict[int, object] = {}
                    for ws, c in subbed:
                        final = replace_leaves(ctx, {_HOLE: ws})
                        col = colindex[final]
                        s = field.add(row.get(col, field.zero), c)
                        if s == field.zero:
                            row.pop(col, None)
                        else:
                            row[col] = s
                    if not row:
                        continue
                    norm = _normalize_row(row, field)
                    if norm not in seen:
                        seen.add(norm)
                        rows.append(norm)
    return RelationMatrix(words, rows, field)


# -- exact elimination ---------------------------------------------------


class Echelon:
    """Incremental sparse row echelon form.

    Over Q rows are kept as content-stripped integer vectors and combined
    fraction-free; over GF(p) pivots are normalized to leading coefficient 1.
    Pivot columns follow word enumeration order (smallest column leads).
    """

    def __init__(self, field):
        self.field = field
        self.rational = isinstance(field, Rationals)
        self.pivots: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _strip(self, r: dict[int, int]) -> dict[int, int]:
        g = 0
        for c in r.values():
            g = gcd(g, c)
        lead = min(r)
        if r[lead] < 0:
            g = -g
        if g not in (0, 1):
            return {col: c // g for col, c in r.items()}
        return r

    def reduce(self, row: dict[int, object]) -> dict[int, object]:
        """Residual of a row after reduction against the current pivots."""
        r = dict(row)
        if self.rational:
            # go fraction-free
            if r and any(isinstance(c, Fraction) for c in r.values()):
                den = lcm(*(Fraction(c).denominator for c in r.values()))
                r = {col: int(Fraction(c) * den) for col, c in r.items()}
            while r:
                lead = min(r)
                p = self.pivots.get(lead)
                if p is None:
                    return self._strip(r)
                a, b = p[lead], r[lead]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                new: dict[int, int] = {col: ma * c for col, c in r.items()}
                for col, c in p.items():
                    s = new.get(col, 0) - mb * c
                    if s == 0:
                        new.pop(col, None)
                    else:
                        new[col] = s
                r = new
            return r
        f = self.field
        while r:
            lead = min(r)
            p = self.pivots.get(lead)
            if p is None:
                inv = f.inv(r[lead])
                return {col: f.mul(c, inv) for col, c in r.items()}
            b = r[lead]
            new = {}
            for col, c in r.items():
                new[col] = c
            for col, c in p.items():
                s = f.sub(new.get(col, f.zero), f.mul(b, c))
                if s == f.zero:
                    new.pop(col, None)
                else:
                    new[col] = s
            r = new
        return r

    def add_row(self, row: dict[int, object]) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: dict[int, object]) -> bool:
        return not self.reduce(row)


def _echelon(matrix: RelationMatrix) -> Echelon:
    ech = Echelon(matrix.field)
    # unit rows first: they become pivots instantly and keep fill-in low
    for row in sorted(matrix.rows, key=lambda r: (len(r), r[0][0])):
        ech.add_row(dict(row))
    return ech


def quotient_dimension(ids: IdentitySet, md: Mapping[int, int], field=QQ,
                       cap: int = DEFAULT_DEGREE_CAP) -> int:
    """dim of the md-component of the relatively free algebra of ``ids``."""
    matrix = relation_rows(ids, md, field, cap)
    return matrix.ncols - _echelon(matrix).rank


def quotient_basis(ids: IdentitySet, md: Mapping[int, int], field=QQ,
                   cap: int = DEFAULT_DEGREE_CAP) -> list[MagmaWord]:
    """Words whose classes form a basis of the md-component (non-pivot columns)."""
    matrix = relation_rows(ids, md, field, cap)
    ech = _echelon(matrix)
    return [w for i, w in enumerate(matrix.words) if i not in ech.pivots]


def membership(f: MagmaPoly, ids: IdentitySet, field=None,
               cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """True iff f lies in the T-ideal of ``ids`` (f = 0 in the free algebra)."""
    if f.is_zero():
        return True
    field = field if field is not None else f.field
    mds = [multidegree(w) for w in f.terms]
    md = mds[0]
    if any(m != md for m in mds[1:]):
        raise ValueError("membership requires a multihomogeneous polynomial")
    matrix = relation_rows(ids, md, field, cap)
    ech = _echelon(matrix)
    colindex = {w: i for i, w in enumerate(matrix.words)}
    vec = {colindex[w]: field.coerce(c) for w, c in f.terms.items()}
    return ech.contains(vec)


def dimension_cross_check(ids: IdentitySet, md: Mapping[int, int],
                          primes: Sequence[int] = (101, 1009),
                          cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Dimension over Q, sanity-checked against GF(p) for each prime.

    A disagreement (unlucky-prime rank drop would show up here) raises.
    """
    dim_q = quotient_dimension(ids, md, QQ, cap)
    for p in primes:
        dim_p = quotient_dimension(ids, md, GF(p), cap)
        if dim_p != dim_q:
            raise ArithmeticError(
                f"dimension mismatch for {ids.name} at {dict(md)}: "
                f"Q gives {dim_q}, GF({p}) gives {dim_p}"
            )
    return dim_q
