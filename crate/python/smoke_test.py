#!/usr/bin/env python3
"""Build the extension module and run its flagship computations end to end.

Usage: python3 python/smoke_test.py [--release]
"""

import json
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_module(dest: Path, release: bool) -> None:
    cmd = ["cargo", "build", "-p", "midproof-py"]
    profile = "debug"
    if release:
        cmd.append("--release")
        profile = "release"
    subprocess.run(cmd, cwd=ROOT, check=True)
    built = ROOT / "target" / profile / "libmidproof_py.so"
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, dest / f"midproof_py{suffix}")


def main() -> int:
    release = "--release" in sys.argv[1:]
    tmp = tempfile.mkdtemp(prefix="midproof_py_")
    build_module(Path(tmp), release)
    sys.path.insert(0, tmp)
    import midproof_py as mp

    # unit fractions: the flagship decomposition plus brute-force agreement
    found = mp.unitfrac(3, "1", 2)
    assert found == [[2, 3, 6], [2, 4, 4], [3, 3, 3]], found
    assert mp.unitfrac_brute_force(3, "1", 2, 60) == found
    assert mp.unitfrac(2, "3/4", 3) == []
    print("ok: unit fractions")

    # ray colouring: the bundled dataset refutes, and the certificate
    # survives the independent checker
    g = mp.RayGraph.peres33()
    assert (len(g), g.edge_count(), g.triple_count()) == (33, 72, 16)
    cert = g.search()
    assert cert.verdict == "uncolourable"
    assert cert.branch_count > 0
    assert cert.check()
    round_trip = mp.Certificate.from_json(cert.to_json())
    assert round_trip.render("json") == cert.render("json")
    assert json.loads(cert.to_json())["verdict"] == "uncolourable"
    print(f"ok: peres33 refuted ({cert.branch_count} branches), certificate checks")

    # the symmetry preset needs no branching at all
    wlog = mp.RayGraph.wlog_assumptions()
    fast = g.greedy(wlog)
    assert fast.verdict == "uncolourable"
    assert fast.branch_count == 0
    assert fast.check(wlog)
    print("ok: preset refutes by propagation alone")

    # a small colourable graph comes back with a concrete assignment
    basis = mp.RayGraph(["1 0 0", "0 1 0", "0 0 1"])
    colours = basis.search().assignment()
    assert sorted(colours) == ["green", "red", "red"], colours
    print("ok: colourable graphs yield assignments")

    # ideal membership with cofactor witnesses
    vars_xy = ["x", "y"]
    gens = ["x^2 + y^2 - 1", "x - y"]
    assert mp.groebner_basis(vars_xy, gens, "lex")
    member, cofactors = mp.ideal_member(vars_xy, gens, "x^2 - x*y")
    assert member and len(cofactors) == 2
    member, cofactors = mp.ideal_member(vars_xy, gens, "x + 1")
    assert not member and cofactors is None
    print("ok: ideal membership")

    # the product formula, concretely and abstractly
    assert mp.cheb(6) == "32*x^6 - 48*x^4 + 18*x^2 - 1"
    assert all(mp.verify_mult(m, k) for m in range(6) for k in range(6))
    proved, cofactors = mp.prove_mult_formula()
    assert proved and len(cofactors) == 5
    print("ok: product formula proved with 5 cofactors")

    # parse failures surface as ValueError with the original message
    try:
        mp.unitfrac(3, "one", 1)
    except ValueError:
        pass
    else:
        raise AssertionError("bad rational must raise ValueError")
    try:
        mp.RayGraph(["0 0 0"])
    except ValueError:
        pass
    else:
        raise AssertionError("zero vector must raise ValueError")
    print("ok: errors map to ValueError")

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
