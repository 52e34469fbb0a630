"""A1 in a few lines: E polynomials, their v = 0 limits and Weyl characters."""
from __future__ import annotations

from macweyl.macdonald import ram_yip
from macweyl.rootdata import build
from macweyl.weyl_characters import dimension, global_char, local_char

A1 = build("A1")
s = A1.W.parse("s1")

for m in range(1, 4):
    lam = (-m,)
    print(f"E_{{{-m}w}}          =", ram_yip(A1, lam).value)
    print(f"E_{{{-m}w}}(v=0)     =", ram_yip(A1, lam, 0, "v0").value)
    for sigma in (0, s):
        ch = local_char(A1, sigma, lam)
        print(f"  ch W, sigma={A1.W.name(sigma):3} dim {dimension(ch)}:", ch)
    print("  global (sigma=id) to q^6:", global_char(A1, 0, lam, 6))
    print()
