#!/usr/bin/env python3
"""Smoke test for the smallworld_py extension module.

Builds the cdylib if needed (``cargo build -p smallworld-py --release``),
loads it, and exercises scenario parsing, topology construction, metric
measurement, determinism, and error handling. Exits 0 and prints PASS on
success; any failure raises.
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def load_module():
    lib = None
    for profile in ("release", "debug"):
        candidate = REPO_ROOT / "target" / profile / "libsmallworld_py.so"
        if candidate.exists():
            lib = candidate
            break
    if lib is None:
        subprocess.run(
            ["cargo", "build", "-p", "smallworld-py", "--release"],
            cwd=REPO_ROOT,
            check=True,
        )
        lib = REPO_ROOT / "target" / "release" / "libsmallworld_py.so"

    staging = Path(tempfile.mkdtemp(prefix="smallworld_py_"))
    shutil.copy2(lib, staging / "smallworld_py.so")
    sys.path.insert(0, str(staging))
    import smallworld_py

    return smallworld_py


def check_grid_lattice(sw):
    scenario = sw.Scenario.builtin("Grid-35")
    assert scenario.distribution == "grid"
    assert scenario.n == 1000 and scenario.r0_m == 35.0

    # The bare lattice (no short cuts) is triangle-free.
    scenario.set("k", "0")
    topology = sw.build_topology(scenario, seed=1)
    assert topology.node_count == 1000
    assert topology.channel_count == 1

    metrics = topology.measure()
    assert metrics.clustering == 0.0, metrics.clustering
    assert metrics.per_channel_edges[0] == 1936, metrics.per_channel_edges
    assert metrics.connected_pairs > 0

    # The grid layout ignores the seed entirely.
    again = sw.build_topology(scenario, seed=99)
    assert topology.nodes() == again.nodes()


def check_determinism(sw):
    scenario = sw.Scenario.parse(
        "\n".join(
            [
                "name = smoke",
                "distribution = random",
                "n = 80",
                "area_side_m = 400",
                "r0_m = 60",
                "alpha = 1",
                "k = 2",
                "radii_ratio = 3",
                "seeds = 1",
            ]
        )
    )
    a = sw.build_topology(scenario, seed=7)
    b = sw.build_topology(scenario, seed=7)
    assert a.nodes() == b.nodes()
    assert all(a.edges(c) == b.edges(c) for c in range(a.channel_count))

    c = sw.build_topology(scenario, seed=8)
    assert a.nodes() != c.nodes()
    return scenario


def check_metrics(sw, scenario):
    # Single-channel run: uniform weights make length = hops * r0^alpha.
    base = sw.Scenario.parse(
        "\n".join(
            [
                "name = base",
                "distribution = random",
                "n = 80",
                "area_side_m = 400",
                "r0_m = 60",
                "alpha = 1",
                "k = 0",
                "radii_ratio = 3",
                "seeds = 1",
            ]
        )
    )
    m0 = sw.run_seed(base, seed=3)
    assert 0.0 <= m0.clustering <= 1.0
    assert m0.char_hop >= 1.0
    assert math.isclose(m0.char_len, m0.char_hop * 60.0, rel_tol=1e-12)
    assert math.isclose(m0.max_len, m0.max_hop * 60.0, rel_tol=1e-12)
    assert m0.sc_ratio == 0.0

    # Channel-prefix curve: sc_ratio never shrinks as channels accumulate.
    curve = sw.run_seed_curve(scenario, seed=3, k_max=2)
    assert len(curve) == 3
    ratios = [m.sc_ratio for m in curve]
    assert ratios == sorted(ratios), ratios
    assert curve[0].sc_ratio == 0.0
    sizes = curve[-1].per_channel_edges
    assert len(sizes) == 3 and sizes[0] > 0


def check_layouts_and_errors(sw):
    grid_a = sw.generate_nodes("grid", 100, 300.0, seed=1)
    grid_b = sw.generate_nodes("grid", 100, 300.0, seed=2)
    assert grid_a == grid_b
    assert all(0.0 <= x <= 300.0 and 0.0 <= y <= 300.0 for x, y in grid_a)

    rand_a = sw.generate_nodes("random", 100, 300.0, seed=1)
    rand_b = sw.generate_nodes("random", 100, 300.0, seed=2)
    assert rand_a != rand_b

    for bad in (
        lambda: sw.Scenario.builtin("Nope-99"),
        lambda: sw.generate_nodes("bogus", 10, 100.0, seed=1),
        lambda: sw.Scenario.builtin("Random-40").set("k", "abc"),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError(f"{bad} did not raise ValueError")

    names = sw.Scenario.names()
    assert "Random-40" in names and "Grid-35" in names, names


def main():
    sw = load_module()
    check_grid_lattice(sw)
    scenario = check_determinism(sw)
    check_metrics(sw, scenario)
    check_layouts_and_errors(sw)
    print("PASS python smoke test")


if __name__ == "__main__":
    main()
