"""Sweep config parsing, row evaluation, CSV formatting."""

import pytest

from fblsec.sweeps import (
    ConfigError,
    effective_config,
    parse_config,
    rows_to_csv,
    run_sweep,
)


def _minimal(**overrides):
    doc = {
        "schema_version": 1,
        "variable": "snr_db",
        "range": {"start": 0.0, "stop": 2.0, "step": 1.0},
        "methods": ["approx"],
    }
    doc.update(overrides)
    return doc


class TestParsing:
    def test_minimal_document(self):
        spec = parse_config(_minimal())
        assert spec.variable == "snr_db"
        assert spec.values == (0.0, 1.0, 2.0)
        assert spec.methods == ("approx",)
        assert spec.design is None

    def test_explicit_list_range(self):
        spec = parse_config(_minimal(range=[1e-3, 1e-2]))
        assert spec.values == (1e-3, 1e-2)

    def test_integer_variable_rounds(self):
        spec = parse_config(_minimal(variable="m", range={"start": 50, "stop": 70, "step": 10}))
        assert spec.values == (50.0, 60.0, 70.0)

    def test_inclusive_endpoint(self):
        spec = parse_config(_minimal(range={"start": -10.0, "stop": 30.0, "step": 2.0}))
        assert len(spec.values) == 21
        assert spec.values[-1] == 30.0

    @pytest.mark.parametrize(
        "mutation, field",
        [
            (lambda d: d.pop("schema_version"), "schema_version"),
            (lambda d: d.update(schema_version=2), "schema_version"),
            (lambda d: d.update(variable="power"), "variable"),
            (lambda d: d.update(range=[]), "range"),
            (lambda d: d.update(range={"start": 0.0, "stop": 1.0, "step": -1.0}), "range.step"),
            (lambda d: d.update(range={"start": 2.0, "stop": 1.0, "step": 1.0}), "range.stop"),
            (lambda d: d.update(range={"start": 0.0, "stop": 1.0}), "range"),
            (lambda d: d.update(fixed={"snr_db": 3.0}), "fixed.snr_db"),
            (lambda d: d.update(fixed={"bogus": 1.0}), "fixed.bogus"),
            (lambda d: d.update(methods=["telepathy"]), "methods"),
            (lambda d: d.update(methods=[]), "methods"),
            (lambda d: d.update(design={"mode": "greedy"}), "design.mode"),
            (lambda d: d.update(design={"mode": "weighted"}), "design.mode"),
            (lambda d: d.update(mc_samples=0), "mc_samples"),
            (lambda d: d.update(mc_seed=-3), "mc_seed"),
            (lambda d: d.update(surprise=1), "config"),
        ],
    )
    def test_schema_violations_name_the_field(self, mutation, field):
        doc = _minimal()
        mutation(doc)
        with pytest.raises(ConfigError) as excinfo:
            parse_config(doc)
        assert field in str(excinfo.value)

    def test_round_trip_through_effective_config(self):
        spec = parse_config(
            _minimal(
                fixed={"m": 80, "eps": 1e-4},
                methods=["approx", "exact"],
                mc_samples=123,
                mc_seed=9,
            )
        )
        assert parse_config(effective_config(spec)) == spec

    def test_design_round_trip(self):
        doc = _minimal(
            variable="m",
            range={"start": 50, "stop": 100, "step": 25},
            fixed={"phi": 1e-2},
            design={"mode": "constrained"},
        )
        spec = parse_config(doc)
        assert parse_config(effective_config(spec)) == spec


class TestRows:
    def test_single_point_range_yields_one_row(self):
        spec = parse_config(_minimal(range=[0.0]))
        header, rows = run_sweep(spec)
        assert header[0] == "snr_db"
        assert len(rows) == 1
        assert rows[0]["ail_approx"] is not None
        assert rows[0]["ail_exact"] is None  # not requested: stays empty

    def test_leakage_shrinks_as_error_target_grows(self):
        spec = parse_config(
            _minimal(variable="eps", range=[1e-6, 1e-4, 1e-2], methods=["approx", "exact"])
        )
        _, rows = run_sweep(spec)
        approx = [row["ail_approx"] for row in rows]
        exact = [row["ail_exact"] for row in rows]
        assert approx[0] > approx[1] > approx[2]
        assert exact[0] > exact[1] > exact[2]

    def test_design_rows_carry_blocklength(self):
        spec = parse_config(
            _minimal(
                variable="phi",
                range=[3e-3, 1e-2, 1e-1],
                design={"mode": "constrained"},
            )
        )
        _, rows = run_sweep(spec)
        stars = [row["n_star"] for row in rows]
        assert all(isinstance(s, int) for s in stars)
        assert stars[0] > stars[1] > stars[2]  # looser threshold, shorter block
        assert all(row["feasible"] for row in rows)

    def test_weighted_design_over_swept_weight(self):
        spec = parse_config(
            _minimal(variable="lambda", range=[0.0, 1.0], design={"mode": "weighted"})
        )
        _, rows = run_sweep(spec)
        assert rows[0]["n_star"] == 1
        assert rows[1]["n_star"] == 1000


class TestCsv:
    def test_formatting(self):
        header = ("x", "value", "count", "flag", "missing")
        rows = [{"x": 1.5, "value": 0.1 + 0.2, "count": 3, "flag": True, "missing": None}]
        text = rows_to_csv(header, rows)
        lines = text.splitlines()
        assert lines[0] == "x,value,count,flag,missing"
        assert lines[1] == "1.5,0.30000000000000004,3,true,"
        assert text.endswith("\n")

    def test_shortest_round_trip_floats(self):
        text = rows_to_csv(("v",), [{"v": 0.09339575474708704}])
        assert "0.09339575474708704" in text
