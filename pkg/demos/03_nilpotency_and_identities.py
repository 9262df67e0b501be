"""Identity checking and the exact left-nilpotency index.

check_identity substitutes basis elements exhaustively (both table
algebras kill products of two degree->=2 factors, which keeps the sweep
finite and fast); left_nilpotency_index searches left-normed products
u1(u2(...(u_{k-1} u_k))) for the smallest k at which all of them vanish.
"""

from metanov import (
    check_identity,
    left_nilpotency_index,
    membership,
    nilpotency_profile,
    parse_expr,
    parse_identity,
    preset,
    render,
)
from metanov.fields import GF

print("Right symmetry (x,y,z)=(x,z,y) holds with it imposed, and fails")
print("without it — with an explicit counterexample:\n")
rs = parse_identity("A(v1,v2,v3) - A(v1,v3,v2) = 0")
print(f"  wnov: {check_identity('wnov', rs, max_degree=5).verdict}")
rep = check_identity("wlc", rs, max_degree=5)
print(f"  wlc : {rep.verdict} at {rep.assignment}")
print(f"        value = {render(rep.value)}\n")

print("Left nilpotency.  With right symmetry the index is exactly 5:")
res = left_nilpotency_index("wnov", cap=6)
print(f"  index = {res}")
print(f"  longest nonzero witness: {res.witness_factors}")
print(f"  its value: {render(res.witness_value)}\n")

print("Without right symmetry there is no left nilpotency: pure-L words")
print("survive at every degree.")
res = left_nilpotency_index("wlc", cap=6)
print(f"  index = {res} (witness {render(res.witness_value)})\n")

print("The oracle sees the same facts T-ideal-theoretically:")
deg4 = parse_expr("x1*(x2*(x3*x4))")
deg5 = parse_expr("x1*(x2*(x3*(x4*x5)))")
for name in ("wnov2", "nov2"):
    ids = preset(name)
    print(f"  [{name}] degree-5 left-normed word is an identity: "
          f"{membership(deg5, ids)}; degree-4: {membership(deg4, ids)}")

print("\nOne extra identity can force full nilpotency.  At degree 5 over")
print("GF(1009):")
for name in ("wlc2", "wlc2+flex", "wlc2+antiflex", "wlc2+lie-nilp:2",
             "wlc2+jordan-nilp:2"):
    flat = nilpotency_profile(preset(name), 5, GF(1009))
    print(f"  {name:<20} degree-5 component zero: {flat}")
