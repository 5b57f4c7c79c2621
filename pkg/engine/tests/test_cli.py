"""
Tests for class literals, the report envelope, exit codes and batch mode
"""
import json
from io import StringIO

import pytest

from main import app, render_table
from middleware.error_handling import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, error_handler
from models.errors import ClassParseError, PreconditionError
from routers.class_literal import LATTICE, SYMPLECTIC, format_class, literal_form, parse_class

ENVELOPE_KEYS = {"input", "n", "subcommand", "result", "warnings", "bounds", "version"}


def run(*argv):
    stdout = StringIO()
    code = app.run(list(argv), stdout=stdout)
    return code, stdout.getvalue()


def run_json(*argv):
    code, output = run(*argv)
    return code, json.loads(output)


class TestClassLiterals:
    """Both literal forms, whitespace-insensitive, with positioned errors"""

    def test_symplectic_form(self, cls):
        assert parse_class("(1|1/2,1/3)") == cls(1, "1/2", "1/3")

    def test_lattice_form_with_spaces(self, cls):
        assert parse_class(" 2 ; 1 , 1 ") == cls(2, 1, 1)

    def test_signed_entries(self, cls):
        assert parse_class("(-1|-2,+1)") == cls(-1, -2, 1)

    @pytest.mark.parametrize(
        "text,message,position",
        [
            ("", "empty class literal", 0),
            ("(1|)", "empty vector", 3),
            ("(1|1/0)", "zero denominator", 5),
            ("(1|1/2", "expected ')'", 6),
            ("(1|1/2)x", "unexpected trailing", 7),
            ("1,2", "expected ';'", 1),
        ],
    )
    def test_errors(self, text, message, position):
        with pytest.raises(ClassParseError) as excinfo:
            parse_class(text)
        assert message in excinfo.value.message
        assert excinfo.value.position == position

    def test_rendering(self, cls):
        d = cls(1, "1/2", "1/3")
        assert format_class(d, SYMPLECTIC) == "(1|1/2,1/3)"
        assert format_class(d, LATTICE) == "1;1/2,1/3"
        assert literal_form(" (1|0)") == SYMPLECTIC
        assert literal_form("1;0") == LATTICE


class TestReportEnvelope:
    def test_reduce(self):
        code, document = run_json("reduce", "(1|1/2,1/3,1/3,1/3)")
        assert code == EXIT_OK
        assert set(document) == ENVELOPE_KEYS
        assert document["subcommand"] == "reduce"
        assert document["n"] == 4
        assert document["result"]["reduced"]["display"] == "(5/6|1/3,1/3,1/6,1/6)"
        assert document["result"]["word"]["generators"] == ["l0", "l3", "l2"]

    def test_vertices_on_ten_points(self):
        code, document = run_json("vertices", "10")
        assert code == EXIT_OK
        assert document["result"]["count"] == 20
        assert document["warnings"]

    def test_membership_uses_class_key(self):
        code, document = run_json("exceptional", "2;1,1,1,1,1")
        assert code == EXIT_OK
        assert document["result"]["member"] is True
        assert document["result"]["class"]["lattice"] == "2;1,1,1,1,1"

    def test_torelli(self):
        code, document = run_json("torelli", "(1|1/2,1/4,1/4,1/4,1/4,1/5)")
        assert code == EXIT_OK
        assert document["result"]["display"] == "PB_4(S^2)"

    def test_decompose_reports_bound(self):
        code, document = run_json("decompose", "1;0,0")
        assert code == EXIT_OK
        assert document["result"]["feasible"] is True
        assert len(document["result"]["terms"]) == 3
        assert document["bounds"]["max_degree"] == 2

    def test_enumerate_roots_warns_for_infinite_systems(self):
        code, document = run_json("enumerate", "--n", "9", "--kind", "root", "--max-degree", "1")
        assert code == EXIT_OK
        assert document["result"]["kind"] == "root"
        assert document["warnings"]

    def test_table_format(self):
        code, output = run("cone", "(1|1/3,1/3,1/3)", "--format", "table")
        assert code == EXIT_OK
        assert "result.in_NRn" in output
        assert "subcommand" in output

    def test_render_table_collapses_classes(self):
        table = render_table({"result": {"cls": {"display": "(1|0)", "lattice": "1;0"}}})
        assert table == "result.cls  (1|0)"


class TestExitCodes:
    """0 success, 1 domain rejection, 2 usage error"""

    def test_domain_rejection(self):
        code, document = run_json("torelli", "(1|" + ",".join(["3/10"] * 10) + ")")
        assert code == EXIT_DOMAIN
        assert document["error"]["category"] == "domain"
        assert "outside theorem hypothesis" in document["error"]["message"]

    def test_parse_error_position(self):
        code, document = run_json("reduce", "(1|1/0)")
        assert code == EXIT_USAGE
        assert document["error"]["type"] == "ClassParseError"
        assert document["error"]["position"] == 5

    def test_missing_flag(self):
        code, document = run_json("d-set", "0;-1,0,0")
        assert code == EXIT_USAGE
        assert "--omega" in document["error"]["message"]

    @pytest.mark.parametrize(
        "argv",
        [
            ("enumerate", "--n", "3", "--max-degree", "-1"),
            ("enumerate", "--n", "3", "--max-degree", "0"),
            ("enumerate", "--n", "0"),
        ],
    )
    def test_invalid_request(self, argv):
        code, document = run_json(*argv)
        assert code == EXIT_USAGE
        assert document["error"]["category"] == "usage"

    def test_unknown_subcommand(self):
        code, _ = run("bogus", "1;0")
        assert code == EXIT_USAGE

    def test_unknown_kind(self):
        code, _ = run("enumerate", "3", "--kind", "bogus")
        assert code == EXIT_USAGE

    def test_internal_errors_hide_details(self):
        handled = error_handler.handle(RuntimeError("boom"), "reduce", "1;0")
        assert handled.exit_code == EXIT_DOMAIN
        assert handled.document["error"]["category"] == "internal"
        assert "boom" not in handled.document["error"]["message"]

    def test_domain_errors_keep_message(self):
        handled = error_handler.handle(PreconditionError("not reduced"), "classify")
        assert handled.document["error"]["message"] == "not reduced"


class TestBatchMode:
    def test_one_line_per_input(self, tmp_path):
        batch = tmp_path / "classes.txt"
        batch.write_text("(1|1/2,1/3,1/3,1/3)\n# comment\n\n(1|1/0)\n(1|1/4,1/2)\n")
        code, output = run("reduce", "--batch", str(batch))
        lines = [json.loads(line) for line in output.splitlines()]
        assert [line["input"] for line in lines] == ["(1|1/2,1/3,1/3,1/3)", "(1|1/0)", "(1|1/4,1/2)"]
        assert "error" in lines[1]
        assert lines[2]["result"]["reduced"]["display"] == "(1|1/2,1/4)"
        assert code == EXIT_USAGE

    def test_missing_batch_file(self, tmp_path):
        code, output = run("reduce", "--batch", str(tmp_path / "missing.txt"))
        assert code == EXIT_USAGE
        assert json.loads(output)["error"]["category"] == "usage"

    @pytest.mark.asyncio
    async def test_invoke_batch_preserves_order(self):
        args = app.build_parser().parse_args(["exceptional"])
        literals = ["0;-1,0", "1;1,1", "1;1,0", "2;1,1"]
        results = await app.invoke_batch("exceptional", literals, args)
        assert [document["input"] for document, _ in results] == literals
        assert [document["result"]["member"] for document, _ in results] == [True, True, False, False]
        assert all(code == EXIT_OK for _, code in results)
