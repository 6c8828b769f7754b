#!/usr/bin/env python3
"""Smoke test for the commkit_py extension module.

Builds nothing itself: it locates the cdylib produced by
`cargo build -p commkit-py` (debug or release), copies it next to a
temporary sys.path entry under the importable name, and exercises the
bindings end to end. Run from anywhere inside the repository:

    cargo build -p commkit-py
    python3 python/smoke_test.py
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def find_repo_root() -> Path:
    here = Path(__file__).resolve()
    for candidate in here.parents:
        if (candidate / "Cargo.toml").exists() and (candidate / "crates").is_dir():
            return candidate
    raise SystemExit("cannot locate the repository root")


def import_commkit(root: Path):
    suffixes = {"linux": ".so", "darwin": ".dylib", "win32": ".dll"}
    suffix = next(v for k, v in suffixes.items() if sys.platform.startswith(k))
    stem = "commkit_py" if sys.platform.startswith("win") else "libcommkit_py"
    candidates = [
        root / "target" / profile / (stem + suffix)
        for profile in ("release", "debug")
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        raise SystemExit(
            "extension not built; run `cargo build -p commkit-py` first "
            f"(looked for {', '.join(str(c) for c in candidates)})"
        )
    newest = max(built, key=lambda p: p.stat().st_mtime)
    staging = Path(tempfile.mkdtemp(prefix="commkit_py_"))
    shutil.copy2(newest, staging / ("commkit_py" + (".pyd" if suffix == ".dll" else ".so")))
    sys.path.insert(0, str(staging))
    import commkit_py

    return commkit_py


def main() -> None:
    root = find_repo_root()
    ck = import_commkit(root)

    # toy graph: two triangles-ish; bridge 3-4, pendant 5
    toy = ck.Graph.from_edge_list("1 2\n1 3\n2 3\n3 4\n4 5\n")
    assert toy.node_count() == 5 and toy.edge_count() == 5
    assert toy.degree("3") == 3
    assert toy.neighbors("3") == ["1", "2", "4"]
    assert toy.common_neighborhood("1", "2") == ["3"]

    eb = dict(toy.edge_betweenness())
    assert math.isclose(eb[("3", "4")], 6.0)
    assert math.isclose(eb[("1", "2")], 1.0)

    assert toy.radicchi("4", "5") is None  # pendant edge is excluded
    assert math.isclose(toy.radicchi("3", "4"), 1.0)
    assert math.isclose(toy.score("ja", "1", "2"), 1.0 / 3.0)
    assert math.isclose(toy.node_clustering("1"), 1.0)

    dend = ck.detect(toy, "radicchi", k=2)
    assert dend.stop_reason == "target_reached"
    first = dend.removals()[0]
    assert first["edge"] == ("3", "4") and first["components_after"] == 2
    part = dend.partition_at(2)
    groups = sorted(sorted(c) for c in part.communities())
    assert groups == [["1", "2", "3"], ["4", "5"]]
    assert math.isclose(ck.modularity(toy, part), 0.22)
    assert math.isclose(ck.nmi(part, part), 1.0)
    assert math.isclose(ck.entropy(dend.partition_at(1)), 0.0)

    # neighborhood rescoring must agree with the full recompute
    full = ck.detect(toy, "ja", policy="full")
    nbhd = ck.detect(toy, "ja", policy="neighborhood")
    assert [r["edge"] for r in full.removals()] == [r["edge"] for r in nbhd.removals()]

    assert len(ck.metrics()) == 12
    curve = ck.sweep(toy, "betweenness", k_max=4)
    assert curve[0][0] == 2
    k, _ = ck.elbow([(2, 0.10), (3, 0.40), (4, 0.42), (5, 0.43)], 2)
    assert k == 4

    # benchmark checks when the bundled networks are present
    karate_path = root / "datasets" / "karate.gml"
    if karate_path.exists():
        karate = ck.Graph.load(str(karate_path))
        stats = karate.stats()
        assert stats["nodes"] == 34 and stats["edges"] == 78
        assert math.isclose(stats["degree_avg"], 4.588, abs_tol=5e-4)

        curve = ck.sweep(karate, "betweenness", k_max=10)
        best_k, best_q = max(curve, key=lambda p: p[1])
        assert best_k == 5 and math.isclose(best_q, 0.401, abs_tol=0.005)

        gn = ck.detect(karate, "betweenness", k=4).partition_at(4)
        ja = ck.detect(karate, "ja", k=4).partition_at(4)
        assert math.isclose(ck.nmi(ja, gn), 0.707, abs_tol=0.01)
        print("karate benchmark checks passed")
    else:
        print("datasets/karate.gml not found; skipped the benchmark checks")

    print("commkit_py", ck.__version__, "smoke test passed")


if __name__ == "__main__":
    main()
