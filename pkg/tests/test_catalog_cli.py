import json

import pytest

from taucalc.catalog import (
    factbase_to_dict,
    load_bundled_catalog,
    load_factbase,
    save_factbase,
)
from taucalc.cli import main
from taucalc.deduce import propagate
from taucalc.errors import CatalogError
from taucalc.interval import Interval
from taucalc.report import build_report


class TestCatalogFiles:
    def test_bundled_catalog_loads(self):
        base = load_bundled_catalog()
        assert len(base.records) >= 6
        assert "trefoil" in base.records

    def test_empty_document(self, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("{}")
        base = load_factbase(str(path))
        assert base.records == {}

    def test_bad_json_reports_line(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "knots": [oops]\n}')
        with pytest.raises(CatalogError, match=":2:"):
            load_factbase(str(path))

    def test_unknown_relation_kind_named(self, tmp_path):
        path = tmp_path / "rel.json"
        path.write_text(json.dumps({
            "knots": [{"id": "a"}, {"id": "b"}],
            "relations": [{"kind": "satellite", "a": "a", "b": "b"}],
        }))
        with pytest.raises(CatalogError, match="satellite"):
            load_factbase(str(path))

    def test_round_trip_same_fixpoint(self, tmp_path):
        base = load_bundled_catalog()
        path = tmp_path / "dump.json"
        save_factbase(base, str(path))
        reloaded = load_factbase(str(path))
        assert factbase_to_dict(reloaded) == factbase_to_dict(base)
        fixed_a, _ = propagate(base)
        fixed_b, _ = propagate(reloaded)
        assert fixed_a.records == fixed_b.records


@pytest.fixture(scope="module")
def fixed():
    base = load_bundled_catalog()
    result, _ = propagate(base)
    return result


class TestCatalogDeduction:
    def test_golden_values(self, fixed):
        assert fixed.knot("10_139").tau == Interval.exact(4)
        assert fixed.knot("m10_152").tau == Interval.exact(4)
        assert fixed.knot("m10_161").tau == Interval.exact(3)
        assert fixed.knot("m10_145").tau == Interval.exact(2)
        assert fixed.knot("P(3,-5,-7)").tau == Interval.exact(1)
        assert fixed.knot("unknot").tau == Interval.exact(0)

    def test_mirrors(self, fixed):
        assert fixed.knot("10_152").tau == Interval.exact(-4)
        assert fixed.knot("10_161").tau == Interval.exact(-3)
        assert fixed.knot("10_161").g4 == Interval.exact(3)
        assert fixed.knot("10_145").tau == Interval.exact(-2)

    def test_doubles(self, fixed):
        assert fixed.knot("trefoil").tb_lower == 0
        for n in range(1, 6):
            assert fixed.knot(f"wh{n}_trefoil").tau == Interval.exact(1)
            assert fixed.knot(f"wh{n}_trefoil").g4 == Interval.exact(1)

    def test_report_deterministic(self):
        base = load_bundled_catalog()
        f1, c1 = propagate(base)
        f2, c2 = propagate(base)
        r1 = json.dumps(build_report(f1, c1, certify=True))
        r2 = json.dumps(build_report(f2, c2, certify=True))
        assert r1 == r2


class TestCli:
    def test_torus(self, capsys):
        assert main(["torus", "3", "5"]) == 0
        assert capsys.readouterr().out.strip() == "4"

    def test_torus_link_rejected(self, capsys):
        assert main(["torus", "2", "4"]) == 2

    def test_pretzel(self, capsys):
        assert main(["pretzel", "3", "-5", "-7"]) == 0
        assert capsys.readouterr().out.strip() == "1"
        assert main(["pretzel", "3", "5", "-7"]) == 0
        assert capsys.readouterr().out.strip() == "inapplicable"

    def test_braid_positive(self, capsys):
        assert main(["braid", "2: 1 1 1", "--positive"]) == 0
        out = capsys.readouterr().out
        assert "tau = 1, g4 = 1, g3 = 1" in out

    def test_braid_negative_letters_rejected(self, capsys):
        assert main(["braid", "2: 1 -1 1", "--positive"]) == 2

    def test_double(self, capsys):
        assert main(["double", "--companion", "trefoil",
                     "--tb-lower", "0", "--iterations", "3"]) == 0
        assert capsys.readouterr().out.strip() == "1"
        assert main(["double", "--companion", "k",
                     "--tb-lower", "-1"]) == 0
        assert capsys.readouterr().out.strip() == "inapplicable"

    def test_grid(self, tmp_path, capsys):
        path = tmp_path / "tref.grid"
        path.write_text("6\nX: 5 4 0 1 2 3\nO: 4 1 2 3 5 0\n")
        assert main(["grid", str(path)]) == 0
        out = capsys.readouterr().out
        assert "components: 1" in out
        assert "tb: 0" in out

    def test_catalog_text(self, capsys):
        assert main(["catalog"]) == 0
        out = capsys.readouterr().out
        assert "10_139" in out and "[4, 4]" in out

    def test_catalog_json_and_determinism(self, capsys):
        assert main(["catalog", "--json", "--certify"]) == 0
        first = capsys.readouterr().out
        report = json.loads(first)
        by_id = {k["id"]: k for k in report["knots"]}
        assert by_id["10_139"]["tau"] == ["4", "4"]
        assert by_id["m10_161"]["tau"] == ["3", "3"]
        assert report["certificate"]
        assert main(["catalog", "--json", "--certify"]) == 0
        assert capsys.readouterr().out == first

    def test_catalog_query(self, capsys):
        assert main(["catalog", "--query", "m10_145"]) == 0
        out = capsys.readouterr().out
        assert "tau = [2, 2]" in out
        assert "R6" in out  # the unknotting step shows up in the slice

    def test_deduce_file(self, tmp_path, capsys):
        path = tmp_path / "facts.json"
        path.write_text(json.dumps({
            "knots": [{"id": "t", "presentations":
                       [{"kind": "torus", "value": "2 7"}]}],
        }))
        assert main(["deduce", str(path), "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["knots"][0]["tau"] == ["3", "3"]

    def test_deduce_inconsistent_exit_code(self, tmp_path, capsys):
        path = tmp_path / "facts.json"
        path.write_text(json.dumps({
            "knots": [{"id": "a"}],
            "facts": [{"id": "a", "kind": "tau_lower", "value": 2},
                      {"id": "a", "kind": "g3", "value": 0}],
        }))
        assert main(["deduce", str(path)]) == 3

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as ei:
            main(["torus", "3"])
        assert ei.value.code == 2
