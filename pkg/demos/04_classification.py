"""Classifying multilinear identities: nilpotency bound or candidate?

Adding one multilinear identity f = 0 on top of right symmetry, the weak
Novikov law, and metabelianity either forces nilpotency with a small
explicit bound, or f lies in a thin exceptional orbit.  The decision
reads off the normal-form coordinates of f: degree >= 5 and degree 2
always get a bound; at degree 4 only identities with no Teichmueller
coordinate escape, at degree 3 only those with no associator coordinate.
"""

from metanov import classify_multilinear, parse_expr, render
from metanov.fields import GF


def show(expr: str, oracle: bool = False) -> None:
    f = parse_expr(expr)
    cls = classify_multilinear(f, oracle_verify=oracle, oracle_field=GF(1009))
    print(f"  f = {expr}")
    print(f"    normal form : {render(cls.normal_form)}")
    line = f"    verdict     : {cls.verdict}"
    if cls.bound is not None:
        line += f" (index <= {cls.bound})"
    if cls.oracle_confirmed is not None:
        line += f", oracle-confirmed: {cls.oracle_confirmed}"
    print(line + "\n")


print("Degree 2: any identity forces nilpotency of index <= 5.\n")
show("x1*x2 + 2 x2*x1", oracle=True)

print("Degree 3: an associator coordinate gives the bound ...\n")
show("A(x1,x2,x3)", oracle=True)

print("... but a combination with no associator coordinate escapes:\n")
show("x1*(x2*x3)")

print("Degree 4: a Teichmueller coordinate gives the bound ...\n")
show("((x1*x2)*x3)*x4", oracle=True)

print("... while annihilator-span combinations are candidates:\n")
show("A(x1, x2*x3, x4)")

print("Degree 5: every identity bounds the index by 6.  Substituting a")
print("squared element for the lead variable strips the identity to a")
print("bare R-word, which witnesses the bound.\n")
show("(((x1*x2)*x3)*x4)*x5")
