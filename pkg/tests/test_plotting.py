from __future__ import annotations

import io

from homometry.cli import run


def png(path):
    return path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_plot_flags_write_figures(tmp_path):
    out = io.StringIO()
    assert run(["count", "--n-max", "40", "--plot", str(tmp_path / "count.png")], out=out) == 0
    assert run(["classify", "--n", "20", "--plot", str(tmp_path / "classes.png")], out=out) == 0
    assert run(["classify", "--n", "11", "--plot", str(tmp_path / "none.png")], out=out) == 0
    assert run(["--threads", "1", "verify", "--n-max", "16", "--plot", str(tmp_path / "sub" / "verify.png")], out=out) == 0
    for name in ("count.png", "classes.png", "none.png", "sub/verify.png"):
        assert png(tmp_path / name)


def test_plot_does_not_change_stdout(tmp_path):
    plain, plotted = io.StringIO(), io.StringIO()
    run(["count", "--n-max", "30"], out=plain)
    run(["count", "--n-max", "30", "--plot", str(tmp_path / "c.png")], out=plotted)
    assert plain.getvalue() == plotted.getvalue()
