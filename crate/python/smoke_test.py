"""Smoke test for the synchro_py extension.

Builds the extension with cargo, puts it on sys.path, and exercises
the main entry points.
"""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(
        ["cargo", "build", "-p", "synchro-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = {"darwin": "libsynchro_py.dylib", "win32": "synchro_py.dll"}.get(
        sys.platform, "libsynchro_py.so"
    )
    target = os.environ.get("CARGO_TARGET_DIR", os.path.join(ROOT, "target"))
    out = tempfile.mkdtemp(prefix="synchro_py")
    ext = "synchro_py.pyd" if sys.platform == "win32" else "synchro_py.so"
    shutil.copy(os.path.join(target, "debug", lib), os.path.join(out, ext))
    sys.path.insert(0, out)


def main():
    build()
    import synchro_py as s

    shift = s.catalog_get("shift2")
    assert shift.num_states == 2 and shift.alphabet_size == 2
    assert s.Transducer.parse(shift.to_tdx()) == shift
    assert s.sync_level(shift) == 1
    assert s.sync_profile(shift)["synchronizing"] is True

    g = s.CATALOG["g_h3"]
    assert g.read_word("b", "12") == ("b", "20")
    assert g.is_invertible()
    assert g.invert().invert() == g
    assert g.dual().dual().same_tables(g)
    assert s.bisync_level(g) == 1

    sizes = [r["min_core_size"] for r in s.growth_series(g, 10)["records"]]
    assert sizes == [2, 3, 5, 7, 11, 15, 23, 31, 47, 63], sizes
    assert s.growth_csv(shift, 3).startswith("m,core_size")
    assert s.min_core(s.power(shift, 3)).num_states == 8
    assert s.minimize(s.product(shift, shift)).num_states == 4
    assert s.core_dist(s.power(g, 5)) >= 0
    assert s.core(shift).num_states == 2

    assert s.sigma(1, 3) == 6
    assert s.sigma(30, 30) == 114449595062769120
    assert s.bisync_family(2).num_states == 3

    try:
        s.catalog_get("nope")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown name accepted")
    try:
        shift.invert()
    except ValueError:
        pass
    else:
        raise AssertionError("shift inverted")

    reports = s.run_verify("sigma-identities", 0)
    assert reports[0]["passed"], reports
    print("smoke test ok:", ", ".join(s.catalog_names()))


if __name__ == "__main__":
    main()
