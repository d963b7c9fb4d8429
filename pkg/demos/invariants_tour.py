"""Homological invariants read off the tip set, for every bundled fixture."""

from grobalg import (betti_table, cartan_determinant, cartan_matrix, enumerate_nontips,
                     global_dimension, InfiniteDimensionError, load_fixture)
from grobalg.schemefile import FIXTURES

for name in FIXTURES:
    s = load_fixture(name).scheme()
    basis = enumerate_nontips(s, max_length=6)
    counts = [len(ps) for ps in basis.by_length]
    print(f"{name}: D={s.D}, nontips by length {counts}{'' if basis.finite else ' ...'}")
    try:
        c = cartan_matrix(s)
        print(f"  Cartan {c.shape[0]}x{c.shape[1]}, det {cartan_determinant(s)}")
    except InfiniteDimensionError:
        print("  infinite dimensional, no Cartan matrix")
    try:
        print(f"  gldim {global_dimension(s)}")
    except InfiniteDimensionError:
        print("  gldim undefined (infinite dimensional)")
    table = betti_table(s, 5)
    v = s.quiver.vertices[0]
    print(f"  Betti at {v}:", [int(x) for x in table[:, 0, 0]])
