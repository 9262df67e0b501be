"""High-level verification and classification over the table algebras:
identity checking by exhaustive basis substitution, left-nilpotency
indices, desk-scale nilpotency profiles, and the multilinear-identity
classification into nilpotent bounds vs non-nilpotent candidate forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import wlc, wn
from .fields import GF, QQ
from .magma import (
    Atom,
    MagmaPoly,
    is_multilinear,
    leaves,
    multidegree,
    poly_variables,
    replace_leaves,
)
from .multisets import md_total, partitions_of
from .oracle import DEFAULT_DEGREE_CAP, IdentitySet, preset, quotient_dimension


@dataclass(frozen=True)
class TableAlgebra:
    name: str
    gen: object
    eval_poly: object
    basis: object
    zero: object
    degree_of: object


_ALGEBRAS = {
    "wlc": TableAlgebra(
        "wlc", wlc.gen, wlc.wlc_eval, wlc.wlc_basis,
        wlc.WlcElement.zero, lambda k: k.degree,
    ),
    "wnov": TableAlgebra(
        "wnov", wn.gen, wn.wn_eval, wn.wn_basis,
        wn.WnElement.zero, lambda k: k.degree,
    ),
}


def get_algebra(name: str) -> TableAlgebra:
    if name not in _ALGEBRAS:
        raise ValueError(f"unknown algebra {name!r} (expected 'wlc' or 'wnov')")
    return _ALGEBRAS[name]


def _multidegrees(pool: int, total: int):
    """All multidegrees on generators x1..x<pool> of the given total degree."""
    def rec(k: int, left: int):
        if k == pool:
            yield {pool: left} if left else {}
            return
        for m in range(left, -1, -1):
            for rest in rec(k + 1, left - m):
                yield {k: m, **rest} if m else rest
    for md in rec(1, total):
        if md_total(md) == total:
            yield md


def basis_elements_by_degree(alg: TableAlgebra, max_degree: int, pool: int,
                             field=QQ) -> dict[int, list]:
    """Basis keys of each degree <= max_degree with indices from x1..x<pool>."""
    out: dict[int, list] = {}
    for d in range(1, max_degree + 1):
        keys = []
        for md in _multidegrees(pool, d):
            keys.extend(alg.basis(md))
        out[d] = keys
    return out


def _element_of(alg: TableAlgebra, key, field):
    z = alg.zero(field)
    e = type(z).basis(key, field)
    return e


def _eval_at(alg: TableAlgebra, f: MagmaPoly, assignment: Mapping[int, object],
             field):
    """Value of f with formal variables bound to table-algebra elements."""
    def ev(w):
        if isinstance(w, Atom):
            if w.kind == "v":
                return assignment[w.index]
            return alg.gen(w.index, field)
        l = ev(w.left)
        if l.is_zero():
            return l
        return l * ev(w.right)

    total = alg.zero(field)
    for w, c in f.terms.items():
        val = ev(w)
        if not val.is_zero():
            total = total + val.scaled(c)
    return total


@dataclass
class CheckReport:
    identity: MagmaPoly
    algebra: str
    verdict: str  # "holds" or "counterexample"
    assignment: dict | None
    value: object | None
    domain: str

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


def _term_degree(w, slot_deg: Mapping[int, int]) -> int | None:
    """Degree of a term word under a degree assignment, or None if the word
    is identically zero on that degree block (both table algebras kill any
    product of two factors of degree >= 2)."""
    if isinstance(w, Atom):
        return slot_deg[w.index] if w.kind == "v" else 1
    dl = _term_degree(w.left, slot_deg)
    dr = _term_degree(w.right, slot_deg)
    if dl is None or dr is None or (dl >= 2 and dr >= 2):
        return None
    return dl + dr


def _term_vars(w) -> tuple[int, ...]:
    return tuple(sorted(a.index for a in leaves(w) if a.kind == "v"))


def check_identity(algebra: str, f: MagmaPoly, max_degree: int = 7,
                   pool: int = 5, field=QQ) -> CheckReport:
    """Exhaustively substitute basis elements into a multilinear identity.

    Both table algebras kill every product of two factors of degree >= 2,
    so tuples assigning two or more slots an element of degree >= 2
    evaluate to zero automatically and are skipped, as are individual
    terms whose shape forces such a product on a given degree block.
    Subterm values are memoized across the sweep of each block.
    """
    if not is_multilinear(f):
        raise ValueError("check_identity requires a multilinear identity")
    alg = get_algebra(algebra)
    vs = poly_variables(f)
    m = len(vs)
    domain = (f"basis elements over x1..x{pool}, result degree <= {max_degree}")
    by_deg = basis_elements_by_degree(alg, max_degree - (m - 1), pool, field)
    elems = {
        d: [(k, _element_of(alg, k, field)) for k in keys]
        for d, keys in by_deg.items()
    }
    zero = alg.zero(field)
    term_support: dict = {}

    def _collect_support(w):
        if w in term_support:
            return
        term_support[w] = _term_vars(w)
        if not isinstance(w, Atom):
            _collect_support(w.left)
            _collect_support(w.right)

    for w in f.terms:
        _collect_support(w)
    deg_choices = sorted(
        (degs for degs in itertools.product(sorted(elems), repeat=m)
         if sum(degs) <= max_degree and sum(1 for d in degs if d >= 2) <= 1),
        key=lambda t: (sum(t), t),
    )
    for degs in deg_choices:
        slot_deg = {vs[i]: degs[i] for i in range(m)}
        live = [(w, c) for w, c in f.terms.items()
                if _term_degree(w, slot_deg) is not None]
        if not live:
            continue
        memo: dict = {}

        def ev(w, assignment):
            if isinstance(w, Atom):
                if w.kind == "v":
                    return assignment[w.index]
                return alg.gen(w.index, field)
            key = (w, tuple(id(assignment[i]) for i in term_support[w]))
            if key in memo:
                return memo[key]
            l = ev(w.left, assignment)
            val = l if l.is_zero() else l * ev(w.right, assignment)
            memo[key] = val
            return val

        for combo in itertools.product(*(elems[d] for d in degs)):
            assignment = {vs[i]: combo[i][1] for i in range(m)}
            total = zero
            for w, c in live:
                val = ev(w, assignment)
                if not val.is_zero():
                    total = total + val.scaled(c)
            if not total.is_zero():
                return CheckReport(
                    f, algebra, "counterexample",
                    {vs[i]: combo[i][0] for i in range(m)}, total, domain,
                )
    return CheckReport(f, algebra, "holds", None, None, domain)


@dataclass
class NilpotencyIndex:
    index: int | None  # None: exceeds the degree cap
    cap: int
    witness_factors: tuple | None  # nonzero left-normed product of index-1 factors
    witness_value: object | None

    def __str__(self) -> str:
        return "exceeds cap" if self.index is None else str(self.index)


def left_nilpotency_index(algebra: str, cap: int = 6, pool: int = 5,
                          field=QQ) -> NilpotencyIndex:
    """Smallest k such that every left-normed product u1(u2(..(u_{k-1}u_k)))
    of basis elements vanishes, searching products of total degree <= cap.
    """
    if cap > 7:
        raise ValueError("cap must be <= 7")
    alg = get_algebra(algebra)
    by_deg = basis_elements_by_degree(alg, cap, pool, field)
    elems = {
        d: [(k, _element_of(alg, k, field)) for k in keys]
        for d, keys in by_deg.items()
    }
    prev = ((alg.basis({1: 1})[0],), alg.gen(1, field))
    for k in range(2, cap + 1):
        found = None
        deg_choices = sorted(
            (degs for degs in itertools.product(sorted(elems), repeat=k)
             if sum(degs) <= cap and sum(1 for d in degs if d >= 2) <= 1),
            key=lambda t: (sum(t), t),
        )
        for degs in deg_choices:
            for combo in itertools.product(*(elems[d] for d in degs)):
                val = combo[-1][1]
                for i in range(k - 2, -1, -1):
                    val = combo[i][1] * val
                    if val.is_zero():
                        break
                if not val.is_zero():
                    found = (tuple(c[0] for c in combo), val)
                    break
            if found:
                break
        if found is None:
            return NilpotencyIndex(k, cap, prev[0], prev[1])
        prev = found
    return NilpotencyIndex(None, cap, prev[0], prev[1])


def nilpotency_profile(ids: IdentitySet, degree: int, field=QQ,
                       cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """True iff every multidegree component of the given total degree is zero."""
    if degree > cap:
        raise ValueError(f"degree {degree} exceeds cap {cap}")
    for part in partitions_of(degree):
        md = {i + 1: p for i, p in enumerate(part)}
        if quotient_dimension(ids, md, field, cap) != 0:
            return False
    return True


def gens_to_vars(f: MagmaPoly) -> MagmaPoly:
    """Relabel generators x_i as formal variables v_i (identity polynomial)."""
    out = MagmaPoly.zero(f.field)
    for w, c in f.terms.items():
        mapping = {a: Atom("v", a.index) for a in leaves(w) if a.kind == "x"}
        out = out + MagmaPoly.word(replace_leaves(w, mapping), f.field).scaled(c)
    return out


@dataclass
class Classification:
    input: MagmaPoly
    degree: int
    verdict: str  # "nilpotent_bound" or "non_nilpotent_candidate"
    bound: int | None
    normal_form: object  # WnElement coordinates of the input
    oracle_confirmed: bool | None = None


def classify_multilinear(f: MagmaPoly, oracle_verify: bool = False,
                         oracle_field=None) -> Classification:
    """Case analysis of a multilinear identity over the right-symmetric
    table algebra.

    Degree n >= 5 forces nilpotency of index <= n+1, degree 2 of index
    <= 5.  At degree 4 (resp. 3) the identity escapes a nilpotency bound
    only if its Teichmueller (resp. associator) coordinates all vanish,
    leaving the alternating-orbit (resp. symmetric-orbit) candidate form.
    """
    mds = [multidegree(w) for w in f.terms]
    if not mds:
        raise ValueError("cannot classify the zero polynomial")
    md = mds[0]
    if any(m != md for m in mds[1:]) or any(m != 1 for m in md.values()):
        raise ValueError("classification requires a multilinear polynomial")
    n = md_total(md)
    if n < 2:
        raise ValueError("degree must be at least 2")
    nf = wn.wn_eval(f)
    if nf.is_zero():
        raise ValueError(
            "identity already holds in the variety; it defines no proper subvariety"
        )
    if n >= 5:
        verdict, bound = "nilpotent_bound", n + 1
    elif n == 2:
        verdict, bound = "nilpotent_bound", 5
    elif n == 4:
        if any(k.kind == wn.TEICH for k in nf.terms):
            verdict, bound = "nilpotent_bound", 5
        else:
            verdict, bound = "non_nilpotent_candidate", None
    else:  # n == 3
        if any(k.kind == wn.ASSOC for k in nf.terms):
            verdict, bound = "nilpotent_bound", 5
        else:
            verdict, bound = "non_nilpotent_candidate", None
    confirmed = None
    if oracle_verify and bound is not None and bound <= 6:
        fld = oracle_field if oracle_field is not None else GF(1009)
        ids = preset("wnov2").union(
            IdentitySet("f", (gens_to_vars(f),)), name="wnov2+f"
        )
        confirmed = nilpotency_profile(ids, bound, fld, cap=max(bound, 6))
    return Classification(f, n, verdict, bound, nf, confirmed)


def operator_word_apply(e, ops: Sequence[tuple[str, int]], field=None):
    """Apply a sequence of multiplication operators left-to-right.

    ``ops`` entries are ("L"|"R"|"H"|"Theta", generator index); H and Theta
    expand to R-L and R+L before application.
    """
    field = field if field is not None else e.field
    if isinstance(e, wlc.WlcElement):
        make_gen = wlc.gen
    elif isinstance(e, wn.WnElement):
        make_gen = wn.gen
    else:
        raise TypeError(f"unsupported element type {type(e).__name__}")
    for op, g in ops:
        xg = make_gen(g, field)
        if op == "L":
            e = xg * e
        elif op == "R":
            e = e * xg
        elif op == "H":
            e = e * xg - xg * e
        elif op == "Theta":
            e = e * xg + xg * e
        else:
            raise ValueError(f"unknown operator {op!r}")
    return e
