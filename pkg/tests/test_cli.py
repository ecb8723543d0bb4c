"""The command-line front end: commands, flags, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from anrdf.cli import main


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfer:
    def test_closure_contains_derived_triple(self, capsys, data_dir, tmp_path):
        out = tmp_path / "closure.anrdf"
        code, _, _ = run(
            capsys, "infer", "--domain", "temporal",
            "-i", str(data_dir / "fig1.anrdf"), "-o", str(out),
        )
        assert code == 0
        assert "(chadHurley type googleEmp) : {[2006,2010]} ." in out.read_text()

    def test_provenance_closure(self, capsys, data_dir):
        code, stdout, _ = run(capsys, "infer", "-i", str(data_dir / "provenance_chad.anrdf"))
        assert code == 0
        assert "(chadHurley type Agent) : (chad ^ foaf) ." in stdout

    def test_empty_input(self, capsys, tmp_path):
        src = tmp_path / "empty.anrdf"
        src.write_text("@domix temporal .\n")
        code, stdout, _ = run(capsys, "infer", "-i", str(src))
        assert code == 0
        assert stdout == "@domix temporal .\n"

    def test_deterministic_output(self, capsys, data_dir):
        first = run(capsys, "infer", "-i", str(data_dir / "fig1.anrdf"))
        second = run(capsys, "infer", "-i", str(data_dir / "fig1.anrdf"))
        assert first == second

    def test_parse_error_exit_2(self, capsys, tmp_path):
        src = tmp_path / "bad.anrdf"
        src.write_text("@domix temporal .\n(a p b) : nonsense .\n")
        code, _, stderr = run(capsys, "infer", "-i", str(src))
        assert code == 2
        assert "error" in stderr

    def test_iteration_cap_exit_3(self, capsys, data_dir):
        code, _, stderr = run(
            capsys, "infer", "-i", str(data_dir / "fig1.anrdf"), "--max-iterations", "2"
        )
        assert code == 3
        assert "firings" in stderr

    def test_segregate_keeps_plain_triples(self, capsys, tmp_path):
        src = tmp_path / "mixed.anrdf"
        src.write_text(
            "@domix temporal .\n"
            "(worker sc person) : {[1,9]} .\n"
            "alice type worker .\n"
            "worker sc person .\n"
        )
        code, stdout, _ = run(
            capsys, "infer", "-i", str(src), "--default-annotation", "segregate"
        )
        assert code == 0
        assert "alice type person .\n" in stdout  # crisp closure of the side graph
        assert "(alice type person)" not in stdout

    def test_top_default_folds_plain_triples(self, capsys, tmp_path):
        src = tmp_path / "mixed.anrdf"
        src.write_text(
            "@domix temporal .\n(worker sc person) : {[1,9]} .\nalice type worker .\n"
        )
        code, stdout, _ = run(capsys, "infer", "-i", str(src))
        assert code == 0
        assert "(alice type person) : {[1,9]} ." in stdout
        assert "(alice type worker) : {[-inf,+inf]} ." in stdout


class TestQuery:
    def test_exx1_tsv(self, capsys, data_dir):
        code, stdout, _ = run(
            capsys, "query", "-i", str(data_dir / "exx1_minimal.anrdf"),
            str(data_dir / "queries" / "exx1.anql"),
        )
        assert code == 0
        lines = stdout.splitlines()
        assert lines[0] == "?p\t?l\t?c"
        assert sorted(lines[1:]) == sorted(
            [
                "toivo\t{[2002,2009]}\t",
                "toivo\t{[2002,2005]}\tpeugeot",
                "toivo\t{[2005,2009]}\trenault",
            ]
        )

    def test_json_format(self, capsys, data_dir):
        code, stdout, _ = run(
            capsys, "query", "-i", str(data_dir / "exx1_minimal.anrdf"),
            str(data_dir / "queries" / "exx1.anql"), "--format", "json",
        )
        assert code == 0
        doc = json.loads(stdout)
        assert doc["vars"] == ["p", "l", "c"]
        assert len(doc["bindings"]) == 3

    def test_before_all_gives_no_rows(self, capsys, data_dir):
        code, stdout, _ = run(
            capsys, "query", "-i", str(data_dir / "fig1_interval_sets.anrdf"),
            str(data_dir / "queries" / "before_all.anql"),
        )
        assert code == 0
        assert stdout.splitlines() == ["?p"]

    def test_before_any_returns_chad(self, capsys, data_dir):
        code, stdout, _ = run(
            capsys, "query", "-i", str(data_dir / "fig1_interval_sets.anrdf"),
            str(data_dir / "queries" / "before_any.anql"),
        )
        assert code == 0
        assert "chadHurley" in stdout

    @pytest.mark.parametrize(
        "mode,expected_rows",
        [("shared-var", 3), ("fresh-vars", 2), ("top", 0)],
    )
    def test_rewrite_defaults_modes(self, capsys, data_dir, mode, expected_rows):
        code, stdout, _ = run(
            capsys, "query", "-i", str(data_dir / "exx1_minimal.anrdf"),
            str(data_dir / "queries" / "non_annotated.anql"),
            "--rewrite-defaults", mode,
        )
        assert code == 0
        assert len(stdout.splitlines()) - 1 == expected_rows

    def test_limit_zero_yields_header_only(self, capsys, data_dir, tmp_path):
        query = tmp_path / "limited.anql"
        query.write_text("SELECT ?p WHERE { (?p type ebayEmp):?l } LIMIT 0")
        code, stdout, _ = run(
            capsys, "query", "-i", str(data_dir / "exx1_minimal.anrdf"), str(query)
        )
        assert code == 0
        assert stdout == "?p\n"

    def test_query_parse_error_exit_2(self, capsys, data_dir, tmp_path):
        bad = tmp_path / "bad.anql"
        bad.write_text("SELECT ?x WHERE { }")
        code, _, stderr = run(
            capsys, "query", "-i", str(data_dir / "fig1.anrdf"), str(bad)
        )
        assert code == 2
        assert "error" in stderr


class TestCheckDomain:
    def test_fuzzy_product_passes(self, capsys):
        code, stdout, _ = run(
            capsys, "check-domain", "--domain", "fuzzy:product", "--samples", "150"
        )
        assert code == 0
        assert "[pass]" in stdout and "[FAIL]" not in stdout

    def test_compound_runs_extra_suites(self, capsys):
        code, stdout, _ = run(
            capsys, "check-domain", "--domain", "compound(temporal,provenance)",
            "--samples", "40",
        )
        assert code == 0
        assert "quasihomomorphism bounds" in stdout

    def test_non_idempotent_compound_reports_distributivity(self, capsys):
        # Documented limitation: this compound fails one semiring axiom.
        code, stdout, _ = run(
            capsys, "check-domain", "--domain", "compound(temporal,fuzzy:product)",
            "--samples", "200",
        )
        assert code == 1
        assert "[FAIL] meet distributes over join" in stdout
        passed = [l for l in stdout.splitlines() if "[pass]" in l]
        assert len(passed) >= 14  # everything else holds

    def test_non_lattice_first_component_exit_4(self, capsys):
        code, _, stderr = run(
            capsys, "check-domain", "--domain", "compound(fuzzy:product,temporal)"
        )
        assert code == 4
        assert "lattice" in stderr

    def test_unknown_domain_exit_2(self, capsys):
        code, _, _ = run(capsys, "check-domain", "--domain", "no-such")
        assert code == 2


class TestNormalizeAnnotation:
    def test_reduce_example(self, capsys):
        code, stdout, _ = run(
            capsys, "normalize-annotation",
            "--domain", "compound(temporal,fuzzy:product)",
            "{<{[2000,2005]},0.7>,<{[2002,2008]},0.5>}",
        )
        assert code == 0
        assert stdout.strip() == (
            "{<{[2000,2005]},0.7>,<{[2000,2008]},0.35>,<{[2002,2008]},0.5>}"
        )

    def test_time_provenance_example(self, capsys):
        code, stdout, _ = run(
            capsys, "normalize-annotation",
            "--domain", "compound(temporal,provenance)",
            "{<{[1998,2006]},wikipedia>,<{[2001,2011]},wrong>}",
        )
        assert code == 0
        assert stdout.strip() == (
            "{<{[1998,2006]},wikipedia>,<{[1998,2011]},(wikipedia ^ wrong)>,"
            "<{[2001,2006]},(wikipedia v wrong)>,<{[2001,2011]},wrong>}"
        )

    def test_bad_literal_exit_2(self, capsys):
        code, _, _ = run(
            capsys, "normalize-annotation", "--domain", "temporal", "{[5,1]}"
        )
        assert code == 2


class TestConvert:
    def test_canonicalises(self, capsys, tmp_path):
        src = tmp_path / "messy.anrdf"
        src.write_text(
            "@domix temporal .\n(b q d) : 2005 .\n(a p c) : {[4,6],[2,5]} .\n"
        )
        code, stdout, _ = run(capsys, "convert", "-i", str(src))
        assert code == 0
        assert stdout == (
            "@domix temporal .\n"
            "(a p c) : {[2,6]} .\n"
            "(b q d) : {[2005,2005]} .\n"
        )

    def test_top_materialisation(self, capsys, tmp_path):
        src = tmp_path / "mixed.anrdf"
        src.write_text("@domix temporal .\na p b .\n")
        code, stdout, _ = run(
            capsys, "convert", "-i", str(src), "--default-annotation", "top"
        )
        assert code == 0
        assert "(a p b) : {[-inf,+inf]} ." in stdout
