"""Smoke test for the pyinhomo extension module.

Build and run from the repository root:

    cargo build --release -p inhomo-py --features extension-module
    cp target/release/libpyinhomo.so python/pyinhomo.so
    python3 python/smoke_test.py
"""

import pyinhomo
from pyinhomo import DigitSeq, NcfExpansion, QuadNum


def main():
    golden = NcfExpansion.parse("[0; (3)*]-")
    assert golden.period == [3]
    assert golden.value() == QuadNum(3, -1, 2, 5)
    assert NcfExpansion.expand(QuadNum.parse("(15-sqrt(165))/6")).period == [3, 5]

    g = DigitSeq.gamma_star(golden)
    assert g.t_period == [1, -1]
    assert g.gamma() == QuadNum(0, 1, 5, 5)

    res = pyinhomo.m_exact(golden, g)
    assert res["kind"] == "exact"
    assert res["value"] == QuadNum(0, 1, 25, 5)
    assert res["value"].decimal(6) == "0.089443"

    half = DigitSeq.expand(QuadNum(1, 0, 2), golden)
    assert pyinhomo.m_exact(golden, half)["kind"] == "upper_bound_only"
    assert pyinhomo.m_exact(golden, half, full=True)["value"] == QuadNum(0, 1, 20, 5)

    d, best = pyinhomo.rho_search(NcfExpansion([], [3, 5]), period_mult=2)
    assert d.t_period == [3, -3]
    assert best["value"] == QuadNum(0, 13, 1815, 165)
    assert pyinhomo.family("period2", 3) == NcfExpansion([], [3, 5])

    rep = pyinhomo.bound_report(3)
    assert str(rep["C"]) == "(-4+3*sqrt(3))/22"
    assert abs(1 / float(rep["C"]) - 18.392304845) < 1e-8
    assert rep["cstar_inverse"] == 20.4874

    member = pyinhomo.family("thm2", 4, 2)
    assert isinstance(member, NcfExpansion)
    assert pyinhomo.compare(QuadNum(0, 1, 1, 2), QuadNum(0, 1, 1, 3)) == -1

    try:
        QuadNum.parse("(1+2*sqrt(5)")
    except pyinhomo.InhomoError as e:
        assert "position" in str(e)
    else:
        raise AssertionError("parse error expected")
    try:
        pyinhomo.bound_report(2)
    except ValueError:
        pass
    else:
        raise AssertionError("R below 3 must be rejected")

    print("pyinhomo", pyinhomo.__version__, "smoke test passed")


if __name__ == "__main__":
    main()
