from __future__ import annotations

import numpy as np
import pytest

from ucindex import (
    EventKind,
    InvalidScenario,
    Scenario,
    ScenarioEvent,
    WindowConfig,
    generate_series,
    indicator_series,
    reference_scenario,
    role_blocks,
)


def test_no_events_no_noise_gives_constant_identical_series():
    scenario = Scenario(t_max=10, n=2, seed=1, base_level=1.0, noise_scale=0.0)
    basic, competency = generate_series(scenario)
    assert np.array_equal(basic.values, np.ones((2, 10)))
    assert np.array_equal(basic.values, competency.values)


def test_constant_scenario_hits_indicator_closed_form():
    scenario = Scenario(t_max=12, n=3, seed=1, base_level=2.0, noise_scale=0.0)
    basic, _ = generate_series(scenario)
    result = indicator_series(basic, WindowConfig(k=5))
    # n*k/(k-1)*level^2 = 3*5/4*4 = 15
    np.testing.assert_allclose(result.values, 15.0, rtol=1e-12)


def test_same_seed_bit_identical():
    scenario = reference_scenario()
    b1, c1 = generate_series(scenario)
    b2, c2 = generate_series(scenario)
    assert np.array_equal(b1.values, b2.values)
    assert np.array_equal(c1.values, c2.values)


def test_different_seed_differs():
    base = reference_scenario()
    other = Scenario(
        t_max=base.t_max, n=base.n, seed=base.seed + 1,
        base_level=base.base_level, noise_scale=base.noise_scale,
        event_effect=base.event_effect, events=base.events,
    )
    b1, _ = generate_series(base)
    b2, _ = generate_series(other)
    assert not np.array_equal(b1.values, b2.values)


def test_modes_split_at_first_event():
    basic, competency = generate_series(reference_scenario())
    assert np.array_equal(basic.values[:, :6], competency.values[:, :6])
    assert not np.array_equal(basic.values[:, 6:], competency.values[:, 6:])


def test_only_event_variables_change():
    scenario = Scenario(
        t_max=20, n=8, seed=3,
        events=(ScenarioEvent(period=5, kind=EventKind.HIRE, role="ops", count=2),),
    )
    basic, competency = generate_series(scenario)
    affected = list(role_blocks(scenario)["ops"])[:2]
    untouched = [i for i in range(8) if i not in affected]
    assert np.array_equal(basic.values[untouched], competency.values[untouched])
    for i in affected:
        np.testing.assert_allclose(
            competency.values[i, 4:], basic.values[i, 4:] * scenario.event_effect
        )
        assert np.array_equal(competency.values[i, :4], basic.values[i, :4])


def test_dismiss_applies_inverse_effect():
    scenario = Scenario(
        t_max=10, n=4, seed=3, noise_scale=0.0, base_level=10.0, event_effect=2.0,
        events=(ScenarioEvent(period=4, kind="dismiss", role="ops", count=1),),
    )
    basic, competency = generate_series(scenario)
    np.testing.assert_allclose(competency.values[0, 3:], 5.0)
    np.testing.assert_allclose(competency.values[0, :3], 10.0)
    np.testing.assert_allclose(basic.values, 10.0)


def test_reference_scenario_shape():
    scenario = reference_scenario()
    assert scenario.t_max == 57
    assert scenario.n == 32
    assert len(scenario.events) == 3
    assert sorted(e.period for e in scenario.events) == [7, 7, 13]
    kinds = {(e.period, e.kind) for e in scenario.events}
    assert (13, EventKind.DISMISS) in kinds


def test_role_blocks_partition_evenly():
    blocks = role_blocks(reference_scenario())
    assert blocks["manager"] == range(0, 16)
    assert blocks["personnel-manager"] == range(16, 32)


class TestValidation:
    def test_rejects_short_axis(self):
        with pytest.raises(InvalidScenario):
            Scenario(t_max=2, n=1, seed=0)

    def test_rejects_negative_noise(self):
        with pytest.raises(InvalidScenario):
            Scenario(t_max=5, n=1, seed=0, noise_scale=-1.0)

    def test_rejects_event_beyond_axis(self):
        with pytest.raises(InvalidScenario):
            Scenario(
                t_max=5, n=2, seed=0,
                events=(ScenarioEvent(period=6, kind="hire", role="x", count=1),),
            )

    def test_rejects_nonpositive_effect(self):
        with pytest.raises(InvalidScenario):
            Scenario(t_max=5, n=1, seed=0, event_effect=0.0)

    def test_rejects_count_exceeding_role_block(self):
        with pytest.raises(InvalidScenario):
            Scenario(
                t_max=5, n=2, seed=0,
                events=(
                    ScenarioEvent(period=1, kind="hire", role="a", count=2),
                    ScenarioEvent(period=2, kind="hire", role="b", count=1),
                ),
            )

    def test_rejects_bad_kind(self):
        with pytest.raises(ValueError):
            ScenarioEvent(period=1, kind="promote", role="x", count=1)
