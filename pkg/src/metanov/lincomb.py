"""Shared machinery: finite linear combinations of canonical basis keys."""

from __future__ import annotations

from typing import Mapping

from .fields import QQ


class LinComb:
    """Finite map key -> nonzero scalar over an exact field.

    Subclasses set ``_key_order`` (callable: key -> sort key) and are used
    for normal-form elements of the table algebras.
    """

    __slots__ = ("field", "terms")

    @staticmethod
    def _key_order(key):
        return key

    def __init__(self, terms: Mapping | None = None, field=QQ):
        self.field = field
        clean = {}
        if terms:
            for k, c in terms.items():
                c = field.coerce(c)
                if c != field.zero:
                    clean[k] = c
        self.terms = clean

    @classmethod
    def zero(cls, field=QQ):
        return cls({}, field)

    @classmethod
    def basis(cls, key, field=QQ):
        return cls({key: field.one}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: type(self)._key_order(t[0]))

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{k!r}" for k, c in self.sorted_terms())
        return f"{type(self).__name__}({body})"

    def _check(self, other):
        if type(self) is not type(other) or self.field != other.field:
            raise ValueError("incompatible operands")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = f.add(out.get(k, f.zero), c)
            if s == f.zero:
                out.pop(k, None)
            else:
                out[k] = s
        res = type(self).zero(f)
        res.terms = out
        return res

    def __neg__(self):
        f = self.field
        res = type(self).zero(f)
        res.terms = {k: f.neg(c) for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return type(self).zero(f)
        res = type(self).zero(f)
        res.terms = {k: f.mul(cv, c) for k, cv in self.terms.items()}
        return res

    def __rmul__(self, c):
        return self.scaled(c)
