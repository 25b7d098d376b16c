import math

import pytest

from amdiscnt.model import (
    DelayModel,
    Geometry,
    HeterogeneitySpec,
    NetworkConfig,
    Position,
    RegionId,
    validate_config,
)


def test_default_config_is_valid():
    assert validate_config(NetworkConfig()) == []


def test_position_distances():
    p = Position(3.0, 4.0)
    assert p.radius() == 5.0
    assert p.distance_to(Position(0.0, 0.0)) == 5.0
    assert p.distance_to(Position(3.0, 4.0)) == 0.0


def test_region_id_forms():
    inner = RegionId()
    assert inner.is_inner
    assert str(inner) == "inner"
    outer = RegionId(3)
    assert not outer.is_inner
    assert str(outer) == "outer3"
    with pytest.raises(ValueError):
        RegionId(8)
    with pytest.raises(ValueError):
        RegionId(-1)


def test_geometry_annulus_width():
    assert Geometry(20.0, 35.0).annulus_width == 15.0


def test_delay_model_modes():
    assert DelayModel().link_delay(123.0) == 1.0
    d = DelayModel(mode="distance", speed=2.0, per_hop=0.5)
    assert d.link_delay(10.0) == 5.5


def test_heterogeneity_constructors():
    assert HeterogeneitySpec.homogeneous(0.5).mode == "homogeneous"
    two = HeterogeneitySpec.two_level(0.5, 0.2, 1.0)
    assert (two.mode, two.m, two.alpha) == ("two_level", 0.2, 1.0)
    three = HeterogeneitySpec.three_level(0.5, 0.2, 0.5, 2.0, 3.0)
    assert (three.m0, three.beta) == (0.5, 3.0)
    multi = HeterogeneitySpec.multi_level(0.5, 1.0)
    assert multi.alpha_max == 1.0


def test_inverted_radii_rejected():
    config = NetworkConfig(geometry=Geometry(r_inner=35.0, r_outer=20.0))
    problems = validate_config(config)
    assert any("r_inner" in p for p in problems)


def test_out_of_range_drop_probability_rejected():
    config = NetworkConfig(link_drop_probability=1.5)
    problems = validate_config(config)
    assert any("link_drop_probability" in p for p in problems)


def test_too_few_nodes_rejected():
    problems = validate_config(NetworkConfig(n_nodes=8))
    assert any("n_nodes" in p for p in problems)


def test_invalid_config_still_constructible_and_all_problems_reported():
    config = NetworkConfig(
        n_nodes=4,
        geometry=Geometry(r_inner=-1.0, r_outer=-2.0),
        heterogeneity=HeterogeneitySpec(mode="nonsense", e0=-1.0),
        deployment_mode="bogus",
        delay=DelayModel(mode="wrong"),
        inner_fraction=0.0,
        link_drop_probability=2.0,
        max_rounds=-1,
    )
    problems = validate_config(config)
    assert len(problems) >= 7


def test_nan_radius_rejected():
    problems = validate_config(NetworkConfig(geometry=Geometry(r_inner=math.nan)))
    assert any("finite" in p for p in problems)
