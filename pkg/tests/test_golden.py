"""Golden-file regression for CLI output.  Set UNFOLDKIT_UPDATE_GOLDEN=1 to rewrite."""
import os
from pathlib import Path

import pytest

from unfoldkit import cli

GOLDEN = Path(__file__).parent / "golden"
CASES = {
    "table_f4.txt": ["table", "F4"],
    "cosets_f4_p3_at2.json": ["--json", "cosets", "F4", "P3", "At2"],
    "orbit_info_f4_b2.txt": ["orbit-info", "F4", "B2"],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    assert cli.main(CASES[name]) == 0
    out = capsys.readouterr().out
    path = GOLDEN / name
    if os.environ.get("UNFOLDKIT_UPDATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
