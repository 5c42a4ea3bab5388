#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds nothing itself: it locates the compiled cdylib under target/, copies it
next to a temp directory under the right module name, imports it and checks a
few anchor facts. Build the library first with

    cargo build --release -p sixsphere-py
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_library():
    for profile in ("release", "debug"):
        for name in ("libsixsphere_py.so", "libsixsphere_py.dylib", "sixsphere_py.dll"):
            cand = ROOT / "target" / profile / name
            if cand.exists():
                return cand
    sys.exit("library not built; run: cargo build --release -p sixsphere-py")


def main():
    lib = locate_library()
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="sixsphere_py_"))
    suffix = ".so" if lib.suffix != ".dll" else ".pyd"
    shutil.copy(lib, tmp / f"sixsphere_py{suffix}")
    sys.path.insert(0, str(tmp))

    import sixsphere_py as six

    # anchors
    m = six.SphereMap.named("six-k2")
    assert m.vertex_count() == 2 and m.edge_count() == 6
    assert m.p_vector() == (0, 6, 0)
    assert m.point_group() == "D6h"
    assert m.z_vector() == "6^2" and m.c_vector() == "2^3"
    assert m.tightness("z") == "tight" and m.tightness("c") == "tight"

    t = six.SphereMap.named("trifolium")
    assert t.p_vector() == (3, 0, 1)
    assert t.point_group() == "C3v"

    # the Goldberg-Coxeter construction and its vertex-count law
    (g,) = m.gc(2, 1)
    assert g.vertex_count() == 14
    assert g.point_group() == "D6"
    assert not g.is_isomorphic(g.mirror(), include_mirror=False)
    assert g.is_isomorphic(g.mirror(), include_mirror=True)

    pair = m.tripling_pair()
    assert len(pair) == 2
    assert all(x.vertex_count() == 6 for x in pair)
    assert pair[0].point_group() == "D3d"

    # dart-list round trip
    back = six.SphereMap.from_dartlist(g.to_dartlist())
    assert back.is_isomorphic(g)

    # census and the two independent counts
    rows = six.census_counts(6)
    assert rows[0] == (0, 0, 1, 1)
    assert rows[5] == (7, 2, 8, 0)
    oracle = six.brute_force_oracle(4, 3)
    assert len(oracle) == 1 == six.count_13_spheres(4)

    # Eisenstein factorization: 3 = (1+j)^2 * j up to j^2
    assert six.eisenstein_factor(3, 0) == (2, 1, (1, 0))

    svg = t.to_svg()
    assert svg.startswith("<svg")

    print("python smoke test: all assertions passed")


if __name__ == "__main__":
    main()
