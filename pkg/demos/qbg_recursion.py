"""The quantum Bruhat graph of A2 and the filtration leaves it produces."""
from __future__ import annotations

from macweyl.qbg import build_qbg
from macweyl.rootdata import build
from macweyl.weyl_characters import filtration_report, local_char

A2 = build("A2")
W = A2.W
g = build_qbg(A2)
for src, label, dst, kind in g.edges():
    print(f"{W.name(src):>6} -> {W.name(dst):<6} {label} {kind}")

lam = (-1, -1)
for sigma in range(W.order):
    rep = filtration_report(A2, sigma, lam, 1)
    taus = ", ".join(W.name(leaf.tau) for leaf in rep.leaves)
    print(f"sigma={W.name(sigma):6} leaves: {taus}  reconciles={rep.reconciles}")
print("ch W_{-rho}:", local_char(A2, 0, lam))
