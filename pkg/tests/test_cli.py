import json

import pytest

from ncdirac.cli import (
    ConfigError,
    ResultRecord,
    emit,
    main,
    parse_config,
    parse_record,
    run,
)


class TestParseConfig:

    def test_defaults(self):
        cfg = parse_config(["landau"])
        assert cfg.command == "landau"
        assert cfg["basis.n_max"] == 16
        assert cfg["phys.c"] == 50.0
        assert cfg["output.format"] == "csv"

    def test_flag_overrides_default(self):
        cfg = parse_config(["landau", "--n-max", "20", "--c", "100"])
        assert cfg["basis.n_max"] == 20
        assert cfg["phys.c"] == 100.0

    def test_config_file_overrides_default(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("basis.n_max = 18\nphys.c = 25\n")
        cfg = parse_config(["landau", "--config", str(f)])
        assert cfg["basis.n_max"] == 18
        assert cfg["phys.c"] == 25.0

    def test_flag_beats_config_file(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("basis.n_max = 18\n")
        cfg = parse_config(["landau", "--config", str(f), "--n-max", "24"])
        assert cfg["basis.n_max"] == 24

    def test_json_config_nested_and_flat(self, tmp_path):
        f = tmp_path / "run.json"
        f.write_text(json.dumps({"basis": {"n_max": 14}, "phys.c": 30}))
        cfg = parse_config(["landau", "--config", str(f)])
        assert cfg["basis.n_max"] == 14
        assert cfg["phys.c"] == 30.0

    def test_unknown_config_key_is_an_error(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("phys.mass = 2\n")
        with pytest.raises(ConfigError, match="phys.mass"):
            parse_config(["landau", "--config", str(f)])

    def test_key_for_wrong_command_is_an_error(self, tmp_path):
        # landau takes no theta list; silently ignoring it would hide typos
        f = tmp_path / "run.cfg"
        f.write_text("nc.theta_list = 0,0.1\n")
        with pytest.raises(ConfigError, match="nc.theta_list"):
            parse_config(["landau", "--config", str(f)])

    def test_malformed_number_names_the_field(self):
        with pytest.raises(ConfigError, match="phys.c"):
            parse_config(["landau", "--c", "fast"])

    def test_validation_names_the_field(self):
        with pytest.raises(ConfigError, match="basis.n_max"):
            parse_config(["landau", "--n-max", "2"])

    def test_list_flag_parsing(self):
        cfg = parse_config(["convergence", "--c-list", "5,10, 20"])
        assert cfg["phys.c_list"] == (5.0, 10.0, 20.0)

    def test_comments_and_blank_lines(self, tmp_path):
        f = tmp_path / "run.cfg"
        f.write_text("# comment\n\nbasis.n_max = 17\n")
        assert parse_config(["landau", "--config", str(f)])["basis.n_max"] == 17

    def test_missing_config_file(self):
        with pytest.raises(ConfigError, match="cannot read"):
            parse_config(["landau", "--config", "/nonexistent/path.cfg"])


class TestEmit:

    @pytest.fixture
    def record(self):
        return run(parse_config(["algebra-check", "--n-max", "6", "--pairs", "3"]))

    def test_csv_is_table_only(self, record):
        text = emit(record, "csv").decode()
        lines = text.strip().split("\r\n")
        assert lines[0] == "check,residual"
        assert len(lines) == 1 + len(record.rows)

    def test_json_round_trip_is_lossless(self, record):
        assert parse_record(emit(record, "json")) == record

    def test_round_trip_preserves_int_float_distinction(self, record):
        back = parse_record(emit(record, "json"))
        assert isinstance(back.config["basis.n_max"], int)
        assert isinstance(back.config["phys.c"], float)
        assert isinstance(back.config["phys.m0"], float)

    def test_seventeen_digit_floats(self):
        rec = ResultRecord(command="x", config={}, columns=("v",),
                           rows=((0.1,),), scalars={}, version="0",
                           wall_time_s=0.0)
        assert "0.10000000000000001" in emit(rec, "csv").decode()

    def test_none_cells(self):
        rec = ResultRecord(command="x", config={}, columns=("a", "b"),
                           rows=((1, None),), scalars={}, version="0",
                           wall_time_s=0.0)
        assert emit(rec, "csv").decode().strip().split("\r\n")[1] == "1,"
        assert parse_record(emit(rec, "json")).rows == ((1, None),)

    def test_empty_table_emits_header_only(self):
        rec = ResultRecord(command="x", config={}, columns=("a", "b"),
                           rows=(), scalars={}, version="0", wall_time_s=0.0)
        assert emit(rec, "csv") == b"a,b\r\n"

    def test_wall_time_on_its_own_json_line(self, record):
        lines = emit(record, "json").decode().splitlines()
        assert sum(1 for ln in lines if ln.startswith('"wall_time_s"')) == 1

    def test_two_runs_differ_only_in_wall_time(self):
        argv = ["nc-algebra", "--n-max", "6", "--theta-list", "0,0.1",
                "--eta-list", "0"]
        a = run(parse_config(argv))
        b = run(parse_config(argv))
        assert emit(a, "csv") == emit(b, "csv")
        strip = lambda r: [ln for ln in emit(r, "json").decode().splitlines()
                           if not ln.startswith('"wall_time_s"')]
        assert strip(a) == strip(b)


class TestMain:

    def test_success_writes_file_and_exits_zero(self, tmp_path, capsys):
        out = tmp_path / "r.csv"
        code = main(["algebra-check", "--n-max", "6", "--pairs", "2",
                     "--output", str(out)])
        captured = capsys.readouterr()
        assert code == 0
        assert out.read_bytes().startswith(b"check,residual")
        assert "wall time" in captured.err
        assert captured.out == ""

    def test_invalid_input_exits_two(self, capsys):
        assert main(["landau", "--n-max", "2"]) == 2
        assert "basis.n_max" in capsys.readouterr().err

    def test_series_divergence_exits_two(self, capsys):
        assert main(["series", "--theta", "5", "--orders", "0,1"]) == 2
        assert "series divergence" in capsys.readouterr().err

    def test_unwritable_output_exits_two(self, capsys):
        code = main(["algebra-check", "--n-max", "6", "--pairs", "2",
                     "--output", "/nonexistent-dir/x.csv"])
        assert code == 2
        assert "cannot write" in capsys.readouterr().err

    def test_unknown_flag_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["landau", "--bogus", "1"])
        assert exc.value.code == 2

    def test_json_config_echo_matches_resolved_values(self, tmp_path):
        out = tmp_path / "r.json"
        main(["landau", "--n-max", "14", "--levels", "2", "--format", "json",
              "--output", str(out)])
        doc = json.loads(out.read_bytes())
        assert doc["config"]["basis.n_max"] == 14
        assert doc["config"]["run.levels"] == 2
        assert doc["command"] == "landau"
        assert doc["version"]
