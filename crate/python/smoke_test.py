"""Smoke test for the adtwist extension module.

Build and run from the repository root:

    cargo build --release -p adtwist-python --features extension-module
    cp target/release/libadtwist.so python/adtwist.so
    python3 python/smoke_test.py
"""

import cmath
import json
import math
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import adtwist  # noqa: E402


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    trefoil = adtwist.Representation.torus(2, 3, 1, 1)
    assert trefoil.generators == ["c", "d"]
    assert trefoil.relation_residual() < 1e-12
    assert close(trefoil.torsion(), -3)
    assert close(trefoil.torsion(column=0), trefoil.torsion(column=1))

    delta = trefoil.twisted_alexander()
    closed = adtwist.torus_delta_closed(2, 3, 1, 1)
    found, sign, power, _ = delta.equal_up_to_unit(closed)
    assert found and sign == 1, (sign, power)
    assert close(adtwist.torus_torsion_closed(2, 3, 1, 1), -3)

    roots = adtwist.riley_roots(-1, 1)
    assert len(roots) == 2
    assert close(roots[1], complex(-0.5, math.sqrt(3) / 2), 1e-12)

    (u,) = adtwist.riley_roots(1, 2)
    assert close(u, 1.5, 1e-12)
    twist = adtwist.Representation.twist(1, 2, u)
    assert close(twist.torsion(), -3)

    s = cmath.exp(1j * math.pi / 5)
    rows = json.loads(adtwist.twist_reports(2, s))
    assert len(rows) == 3 and all(r["status"] == "pass" for r in rows)

    report = json.loads(adtwist.torus_report(3, 4, 1, 1))
    assert report["status"] == "pass"

    terms = adtwist.fox_derivative([(0, 1), (1, 1), (0, -1)], 0)
    assert [c for _, c in terms] == [1, -1]

    try:
        adtwist.Representation.torus(2, 4, 1, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("reducible parameters accepted")

    for name, passed, residual in adtwist.check("lemmas"):
        assert passed, (name, residual)

    print("adtwist smoke test: ok")


if __name__ == "__main__":
    main()
