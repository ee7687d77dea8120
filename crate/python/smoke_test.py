"""Smoke test for the ics_py extension module.

Build the module first, for example with
    cargo build -p ics-py --release --features extension-module
then run this script from the repository root. If ``ics_py`` is not
importable it is loaded straight from target/release or target/debug.
"""

import importlib.machinery
import importlib.util
import pathlib
import sys


def load():
    try:
        import ics_py

        return ics_py
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        for name in ("libics_py.so", "libics_py.dylib", "ics_py.dll"):
            path = root / "target" / profile / name
            if path.exists():
                loader = importlib.machinery.ExtensionFileLoader("ics_py", str(path))
                spec = importlib.util.spec_from_file_location("ics_py", path, loader=loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                return module
    sys.exit("ics_py not found; build it with cargo first")


def main():
    ics = load()

    assert ics.count("rect:2x2") == 13
    assert ics.count("cube:2x2x2") == 101
    sets = ics.enumerate("rect:2x2")
    assert len(sets) == 13 and sets[0] == []
    assert len(ics.enumerate("rect:3x3", limit=5)) == 5

    assert ics.to_motzkin("rect:1x1", [[1, 1]]) == "U D"
    example = [[3, 5], [3, 6], [6, 3]]
    walk = ics.to_walk("rootA:5", example)
    assert walk == "e e nw w se e e w nw se w w"
    assert ics.from_walk("rootA:5", walk) == example
    word = ics.to_motzkin("rect:3x4", [[1, 2], [2, 2]])
    assert ics.from_motzkin("rect:3x4", word) == [[1, 2], [2, 2]]

    st = ics.stats("rootA:5", example)
    assert (st["cardinality"], st["components"], st["minimal"]) == (3, 2, 1)
    assert (st["height_sum"], st["x_axis_returns"], st["y_axis_returns_excl_last"]) == (3, 2, 1)

    assert not ics.is_interval_closed("rect:3x3", [[1, 1], [1, 3]])
    try:
        ics.to_motzkin("rect:3x3", [[1, 1], [1, 3]])
    except ValueError as e:
        assert "not interval-closed" in str(e)
    else:
        raise AssertionError("non-ICS input accepted")

    assert ics.type_a_sequence(10)[-1] == 18448851
    assert ics.b_minuscule_sequence(5) == [1, 2, 7, 26, 96, 356]
    assert ics.b_root_sequence(9)[-1] == 301289155
    assert ics.truncated(3, 2, 1) == 24
    table = ics.rectangle_table(4)
    assert table[2][2] == 13 and table[4][4] == ics.count("rect:4x4")
    assert ics.rectangle_table(30, order=60)[30][30] > 2**64
    print("smoke test passed")


if __name__ == "__main__":
    main()
