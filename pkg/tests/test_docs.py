from __future__ import annotations

import re

from cotstruct.cli import main
from cotstruct.complexes import cohomology_dims
from cotstruct.formats import load_algebra, load_complex
from conftest import ROOT

BLOCK = re.compile(r"```toml\n# file: (\S+)\n(.*?)```", re.S)


def write_examples(tmp_path):
    text = (ROOT / "docs" / "formats.md").read_text(encoding="utf-8")
    blocks = BLOCK.findall(text)
    for name, body in blocks:
        (tmp_path / name).write_text(body, encoding="utf-8")
    return [name for name, _ in blocks]


def test_ten_examples_parse(tmp_path):
    names = write_examples(tmp_path)
    assert len(names) == 10
    for name in names:
        body = (tmp_path / name).read_text()
        if "[quiver]" in body and "algebra" not in body:
            load_algebra(tmp_path / name)
        else:
            load_complex(tmp_path / name)


def test_example_claims(tmp_path):
    write_examples(tmp_path)
    assert cohomology_dims(load_complex(tmp_path / "zero01.toml")) == {0: 1, 1: 1}
    assert cohomology_dims(load_complex(tmp_path / "arrow.toml")) == {0: 1}
    assert load_complex(tmp_path / "kron.toml").algebra.field.characteristic == 0


def test_error_message_in_docs(tmp_path, capsys):
    write_examples(tmp_path)
    bad = tmp_path / "bad.toml"
    bad.write_text('format-version = 1\nalgebra = "a2.toml"\n[terms]\n0 = ["2"]\n1 = ["1"]\n'
                   '[differentials]\n0 = [["a"]]\n')
    assert main(["hom", str(bad), str(bad)]) == 1
    assert "d^0: entry (0, 0) is not a map P_2 -> P_1" in capsys.readouterr().err
