"""Walk through the three-loop scheme whose variety contains the polynomial ring.

Run with ``python3 demos/three_variables.py``.
"""

from fractions import Fraction

from grobalg import buchberger_check, load_fixture, specialize, variety_ideal

sf = load_fixture("example61")
scheme = sf.scheme()
print(f"{len(scheme.tips)} tips, {scheme.D} coordinates")

# the full ideal is sizeable; just report its shape
ideal = variety_ideal(scheme)
print(f"full ideal: {len(ideal)} generators, degrees {sorted(g.degree() for g in ideal.generators)}")

# freeze the ten coordinates listed in the file, keep three free
fixed = [(scheme.var(t, n), v) for (t, n), v in sf.assignments(scheme)]
sub = specialize(scheme, fixed)
names = dict(zip(sub.free_variables, "ABC"))
for g in sub.ideal.generators:
    print("  ", g.to_text(names))

# the zero set is a plane C = 0 and a line A = B = 0
base = dict(fixed)


def at(a, b, c):
    point = dict(base)
    point.update(zip(sub.free_variables, map(Fraction, (a, b, c))))
    return scheme.point(point)


for abc in [(0, 0, 0), (2, -1, 0), (0, 0, 5), (1, 0, 1)]:
    print(abc, "Groebner" if buchberger_check(scheme, at(*abc)) else "not Groebner")
