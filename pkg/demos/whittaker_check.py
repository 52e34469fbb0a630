"""Truncated A1 q-Whittaker series: eigen-equations and recurrences."""
from __future__ import annotations

from macweyl.rootdata import build
from macweyl.whittaker import check_a1_eigen, omega_component, verify_rr

A1 = build("A1")
comp = omega_component(A1, 0, 4, 6)
for t in comp.terms.values():
    print(f"lambda={t.lam} q^{t.q_exp} Z^{t.z_exp[0]}:", t.coeff)

for chk in check_a1_eigen(8, 12):
    print(f"{chk.direction}: {'ok' if chk.ok else 'mismatch'}")

rep = verify_rr(8, 12)
print("recurrences:", "all hold" if rep.ok else rep.failures())
