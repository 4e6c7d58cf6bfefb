"""Smoke test for the `planar_turan` extension module.

Build first:  pip install --no-build-isolation -e crates/python
Run:          python python/smoke_test.py
"""

from fractions import Fraction

import planar_turan as pt


def check_graphs():
    oct_ = pt.PlaneGraph.named("octahedron")
    assert (oct_.vertex_count, oct_.edge_count) == (6, 12)
    assert all(len(f) == 3 for f in oct_.faces())
    again = pt.PlaneGraph.from_rot(oct_.to_rot())
    assert again.canonical_code() == oct_.canonical_code()
    try:
        pt.PlaneGraph.named("nope")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown name accepted")


def check_charges():
    ledger = pt.charge_report(pt.PlaneGraph.named("octahedron"))
    assert ledger["verdict"] is False
    assert Fraction(ledger["total_g"]) == 24 * 8 - 17 * 12 + 6 * 6
    c8 = pt.charge_report(pt.PlaneGraph.named("c8"))
    assert all(Fraction(r["g"]) == -5 for r in c8["blocks"])
    blocks = pt.decompose(pt.PlaneGraph.named("glued-k4-pair"))
    assert [b["class"] for b in blocks] == ["B6i"]


def check_cycles():
    c8 = pt.PlaneGraph.named("c8")
    assert pt.find_cycle_of_length(c8, 7) is None
    assert pt.find_cycle_of_length(c8, 8) is not None
    assert pt.path_spectrum(pt.PlaneGraph.named("k4"), 0, 1) == [1, 2, 3]
    assert pt.find_sparse_set(c8) == [0]
    assert pt.membership(pt.PlaneGraph.named("octahedron"))["member"] is True


def check_constructions():
    g, cert = pt.glued_k4_chain(18)
    assert (cert["vertex_count"], cert["edge_count"]) == (38, 91)
    assert Fraction(cert["bound_value"]) == Fraction(636, 7) and cert["c7_free"]
    w, cert = pt.substitute(pt.PlaneGraph.named("c8"), pt.PlaneGraph.named("octahedron"))
    assert (w.vertex_count, w.edge_count) == (40, 96)
    assert Fraction(cert["excess"]) == 0 and cert["c7_free"]


def check_oracle():
    assert [pt.graph_count(n) for n in range(3, 7)] == [4, 11, 34, 156]
    assert pt.ex_planar(6, 7)["max_edges"] == 12
    report = pt.verify("hpath", 6)
    assert report["violations"] == []
    assert {"B6a (ii)", "B6c (iii)", "B6d (ii)"} <= set(report["census"])


if __name__ == "__main__":
    for check in (check_graphs, check_charges, check_cycles, check_constructions, check_oracle):
        check()
        print(f"ok  {check.__name__}")
