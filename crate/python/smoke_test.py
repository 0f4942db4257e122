"""Smoke test for the matlis_py extension module."""

import matlis_py as m

w = m.StringWord("x^inf Y^inf")
assert w.classify() == "artinian", w.classify()
assert str(w.dual()) == "X^inf y^inf"
assert str(w.truncate(2)) == "xxYY"
sub, quot, j = m.StringWord("X^inf y X^inf").split()
assert (str(sub), str(quot), j) == ("X^inf y", "1 X^inf", 1)
assert m.classify("xY") == "finite-length"

a = m.Module.materialize(m.StringWord("xY"))
assert a.dim == 3 and a.field == "GF(32003)"
assert a.hom_dim(a) == 3
assert a.dual().is_isomorphic(m.Module.materialize(m.StringWord("Xy")))
assert m.Module.from_json(a.to_json()) == a
assert m.StringWord("xxYY").__str__() == "xxYY"
assert m.Module.materialize(m.StringWord("xxYY")).socle_series() == [1, 3, 5]

doc = '{"field":{"Fp":32003},"dim":3,"x":[[0,0,0],[1,0,0],[0,0,0]],"y":[[0,0,0],[0,0,0],[0,0,0]]}'
parts = m.Module.from_json(doc).decompose(seed=0)
assert sorted(p.dim for p, mult, exact in parts) == [1, 2]
assert all(exact for _, _, exact in parts)

b = m.Module.band("band(xY)", eigenvalue="2", field="5")
assert b.dim == 2
assert len(m.Module.band("band(xY)", eigenvalue="1/2", size=2, field="Q").decompose()) == 1

assert m.dvr_dual("A^1 + Q^0 + E^0 + []") == "A^0 + Q^0 + E^1 + []"
assert m.dvr_classify("A + E") == "mixed-reflexive"
assert m.dvr_add("A", "[2]") == "A^1 + Q^0 + E^0 + [2]"

try:
    m.StringWord("xX")
except ValueError as e:
    assert "(x,X)" in str(e)
else:
    raise AssertionError("forbidden pair accepted")

print("smoke test passed")
