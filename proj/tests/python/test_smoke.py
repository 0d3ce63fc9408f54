import json
from fractions import Fraction

import sievedjacobi as sj


def test_verblunsky_sieving():
    a = sj.verblunsky("0", "0", 2, 8)
    assert a[3] == "-1/3"
    assert a[7] == "-1/5"
    assert all(a[n] == "0" for n in (0, 2, 4, 6, 8))


def test_phi_pinned_example():
    coeffs = [Fraction(c) for c in sj.phi_coeffs("0", "0", 2, 4)]
    assert coeffs == [Fraction(1, 3), 0, 0, 0, 1]  # z^4 + 1/3


def test_psi_shape():
    psi4 = json.loads(sj.psi_json("0", "0", 2, 4))
    assert set(psi4) == {"-2", "2"}  # z^-2 + z^2/3
    assert psi4["2"] == ["1/3"]


def test_prl_monic():
    for kind in ("first", "second"):
        coeffs = sj.prl_coeffs(kind, "1/2", "1/4", 3, 5)
        assert Fraction(coeffs[-1]) == 1


def test_eigenchecks():
    assert sj.eigencheck_psi("1/2", "1/4", 2, 10)["all_pass"]
    prl = sj.eigencheck_prl("0", "0", 2, 6)
    assert prl["P"]["all_pass"] and prl["Q"]["all_pass"]
    assert prl["P"]["entries"][1]["eigenvalue"] == "3"


def test_identities_and_numerics():
    ids = sj.verify_identities("1/3", "-1/4", 4)
    assert ids["Ek_zero"] and ids["B_reflection"] and ids["sums"]
    gram = sj.gram_circle("phi", "0", "0", 1, 4)
    assert abs(gram[0][0] - 1.0) < 1e-9
    assert abs(gram[0][1]) < 1e-10
    defect, scale = sj.selfadjointness_defect("0", "0", 2)
    assert defect < 1e-9 * max(scale, 1.0)


def test_bannai_ito():
    rep = sj.bannai_ito_diagonal("1/2", "3/4", "-1/3", "2", 8)
    assert rep["upper_triangular"] and rep["even_branch_ok"]
    assert rep["diagonal"][4]["computed"] == "2"
