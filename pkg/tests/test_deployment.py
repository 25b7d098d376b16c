import math
from random import Random

import pytest

from amdiscnt.deployment import (
    DegenerateDeploymentError,
    OutOfFieldError,
    assign_initial_energy,
    deploy,
    region_node_counts,
    region_of,
    sample_inner_position,
    sample_outer_position,
    theoretical_total_energy,
)
from amdiscnt.model import (
    Geometry,
    HeterogeneitySpec,
    NetworkConfig,
    Position,
    RegionId,
)

GEO = Geometry()


def test_region_of_inner_point():
    assert region_of(Position(10.0, 0.0), GEO).is_inner


def test_region_of_sector_at_sixty_degrees():
    p = Position(30.0 * math.cos(math.pi / 3), 30.0 * math.sin(math.pi / 3))
    assert region_of(p, GEO) == RegionId(1)


def test_region_of_sector_zero_on_positive_axis():
    assert region_of(Position(30.0, 0.0), GEO) == RegionId(0)


def test_region_of_negative_angle_wraps():
    assert region_of(Position(0.0, -30.0), GEO) == RegionId(6)


def test_region_of_boundaries():
    assert region_of(Position(20.0, 0.0), GEO).is_inner
    assert not region_of(Position(35.0, 0.0), GEO).is_inner
    with pytest.raises(OutOfFieldError):
        region_of(Position(35.1, 0.0), GEO)


def test_inner_sampling_uniform_area_fraction():
    rng = Random(7)
    n = 10_000
    inside = 0
    for _ in range(n):
        p = sample_inner_position(rng, GEO, "uniform_area")
        r = p.radius()
        assert 0.0 < r <= GEO.r_inner
        if r <= 10.0:
            inside += 1
    # area ratio (10/20)^2
    assert inside / n == pytest.approx(0.25, abs=0.02)


def test_inner_sampling_uniform_radius_fraction():
    rng = Random(7)
    n = 10_000
    inside = sum(
        1 for _ in range(n)
        if sample_inner_position(rng, GEO, "uniform_radius").radius() <= 10.0)
    assert inside / n == pytest.approx(0.5, abs=0.02)


def test_outer_sampling_stays_in_sector_and_band():
    rng = Random(11)
    for sector in range(8):
        for _ in range(200):
            p = sample_outer_position(rng, GEO, sector, "uniform_area")
            assert GEO.r_inner < p.radius() <= GEO.r_outer
            assert region_of(p, GEO) == RegionId(sector)


def test_outer_sampling_uniform_area_radial_fraction():
    rng = Random(13)
    n = 10_000
    inside = sum(
        1 for _ in range(n)
        if sample_outer_position(rng, GEO, 0, "uniform_area").radius() <= 28.0)
    expected = (28.0 ** 2 - 20.0 ** 2) / (35.0 ** 2 - 20.0 ** 2)
    assert inside / n == pytest.approx(expected, abs=0.02)


def test_region_node_counts_hundred():
    inner, sectors = region_node_counts(100, 1.0 / 9.0)
    assert inner == 11
    assert sectors == [12, 11, 11, 11, 11, 11, 11, 11]
    assert inner + sum(sectors) == 100


def test_region_node_counts_nine():
    inner, sectors = region_node_counts(9, 1.0 / 9.0)
    assert inner == 1
    assert sectors == [1] * 8


def test_deploy_eight_nodes_degenerate():
    config = NetworkConfig(n_nodes=9, inner_fraction=0.2)
    # 2 inner and 7 outer leaves one empty wedge
    with pytest.raises(DegenerateDeploymentError):
        deploy(config, Random(1))


def test_two_level_total_energy_exact():
    spec = HeterogeneitySpec.two_level(0.5, 0.2, 1.0)
    energies = assign_initial_energy(100, spec, Random(3))
    assert math.fsum(e for e, _ in energies) == 60.0
    assert theoretical_total_energy(100, spec) == 60.0
    assert sum(1 for _, scale in energies if scale == 1.0) == 20


def test_three_level_total_energy_exact():
    spec = HeterogeneitySpec.three_level(0.5, 0.2, 0.5, 2.0, 3.0)
    energies = assign_initial_energy(100, spec, Random(3))
    # the realised sum is exact; the closed-form float evaluation is 1 ulp off 85
    assert math.fsum(e for e, _ in energies) == 85.0
    assert theoretical_total_energy(100, spec) == pytest.approx(85.0, rel=1e-12)
    assert sum(1 for _, scale in energies if scale == 5.0) == 10
    assert sum(1 for _, scale in energies if scale == 2.0) == 10


def test_multi_level_mean_total_matches_expectation():
    spec = HeterogeneitySpec.multi_level(0.5, 1.0)
    totals = [
        math.fsum(e for e, _ in assign_initial_energy(100, spec, Random(seed)))
        for seed in range(1000)
    ]
    assert math.fsum(totals) / len(totals) == pytest.approx(75.0, abs=1.0)
    assert theoretical_total_energy(100, spec) == 75.0
    assert all(0.5 < e <= 1.0 for e, _ in assign_initial_energy(100, spec, Random(5)))


def test_deploy_census_and_region_consistency():
    config = NetworkConfig()
    result = deploy(config, Random(42))
    assert len(result.nodes) == 100
    assert result.per_region_counts[RegionId()] == 11
    assert result.per_region_counts[RegionId(0)] == 12
    for sector in range(1, 8):
        assert result.per_region_counts[RegionId(sector)] == 11
    for node in result.nodes:
        assert node.region == region_of(node.position, config.geometry)
        assert node.residual_energy == node.initial_energy
        assert node.alive
    assert [n.id for n in result.nodes] == list(range(100))


def test_deploy_deterministic():
    config = NetworkConfig()
    a = deploy(config, Random(42))
    b = deploy(config, Random(42))
    assert a == b
    c = deploy(config, Random(43))
    assert a != c


def test_deploy_total_matches_two_level_closed_form():
    config = NetworkConfig()
    result = deploy(config, Random(9))
    assert result.total_initial_energy == 60.0
