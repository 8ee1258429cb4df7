import math

import pytest

from opineq import (
    DEFAULT_GRIDS,
    THEOREM_IDS,
    BoundParams,
    CampaignConfig,
    run_campaign,
)


def test_default_grids_cover_every_theorem():
    assert set(DEFAULT_GRIDS) == set(THEOREM_IDS)


def test_config_validation():
    with pytest.raises(ValueError, match="unknown theorem"):
        CampaignConfig(theorem_ids=("nope",))
    with pytest.raises(ValueError, match="samples"):
        CampaignConfig(samples=0)
    with pytest.raises(ValueError, match="dims"):
        CampaignConfig(dims=())
    with pytest.raises(ValueError, match="tol"):
        CampaignConfig(tol=-1.0)
    with pytest.raises(ValueError, match="vectors_per_instance"):
        CampaignConfig(vectors_per_instance=0)


def test_grid_for_accepts_single_params():
    cell = BoundParams(m=1.0, M=2.0)
    config = CampaignConfig(grids={"scalar_amgm": cell})
    assert config.grid_for("scalar_amgm") == (cell,)
    assert config.grid_for("choi") == DEFAULT_GRIDS["choi"]


def test_small_campaign_across_all_theorems_has_no_violations():
    config = CampaignConfig(dims=(2, 3), samples=6, seed=11)
    report = run_campaign(config)
    assert report.ok
    assert report.total_violations == 0
    assert not report.skipped
    assert len(report.cells) == 2 * len(THEOREM_IDS)
    for cell in report.cells:
        assert cell.classical_violations == 0
        assert cell.max_ratio <= 1.0 + config.tol
        assert cell.min_slack >= -config.tol
        assert cell.samples > 0
        assert math.isfinite(cell.mean_slack)


def test_campaign_is_deterministic_for_a_fixed_seed():
    config = CampaignConfig(theorem_ids=("kantorovich", "lin_chain"), dims=(2,),
                            samples=5, seed=3)
    first = run_campaign(config)
    second = run_campaign(config)
    for a, b in zip(first.cells, second.cells):
        assert a.max_ratio == b.max_ratio
        assert a.min_slack == b.min_slack
        assert a.mean_slack == b.mean_slack
        assert a.extremal == b.extremal


def test_seed_changes_the_draws():
    config = CampaignConfig(theorem_ids=("kantorovich",), dims=(3,), samples=5, seed=0)
    other = CampaignConfig(theorem_ids=("kantorovich",), dims=(3,), samples=5, seed=1)
    assert run_campaign(config).cells[0].max_ratio != run_campaign(other).cells[0].max_ratio


def test_lemma_cell_runs_clean():
    config = CampaignConfig(theorem_ids=("lemma_amgm",), dims=(2,), samples=10, seed=42)
    report = run_campaign(config)
    (cell,) = report.cells
    assert cell.samples == 10
    assert cell.violations == 0
    assert 0.0 < cell.max_ratio <= 1.0 + config.tol


def test_wielandt_below_min_dim_is_skipped_not_dropped():
    config = CampaignConfig(theorem_ids=("wielandt_scalar",), dims=(1, 2), samples=3,
                            seed=0)
    report = run_campaign(config)
    assert len(report.cells) == 1 and report.cells[0].dim == 2
    (skip,) = report.skipped
    assert skip.dim == 1
    assert "dim >= 2" in skip.reason


def test_infeasible_cell_is_skipped_with_reason():
    config = CampaignConfig(theorem_ids=("lemma_amgm",), dims=(2,), samples=3, seed=0,
                            grids={"lemma_amgm": BoundParams(m=0.5, M=4.0)})
    report = run_campaign(config)
    assert not report.cells
    (skip,) = report.skipped
    assert "1 < m" in skip.reason


def test_degenerate_chain_cell_sits_at_equality():
    flat = BoundParams(m=2.0, m_prime=2.0, M_prime=2.0, M=2.0)
    config = CampaignConfig(theorem_ids=("lin_chain",), dims=(2,), samples=5, seed=0,
                            grids={"lin_chain": flat})
    report = run_campaign(config)
    (cell,) = report.cells
    assert cell.violations == 0
    assert cell.max_ratio == pytest.approx(1.0, abs=1e-12)
    assert cell.min_slack == pytest.approx(0.0, abs=1e-12)
    # every link of every draw is tight, so all count as near tight
    assert cell.near_tight == cell.samples


def test_sandwich_grid_sweep_runs_clean():
    cells = tuple(BoundParams(m=1.0, m_prime=mp, M_prime=Mp, M=4.0)
                  for mp in (1.0, 2.0) for Mp in (2.0, 3.0))
    config = CampaignConfig(
        theorem_ids=("lin_squared_mapped", "lin_squared_means", "lin_chain"),
        dims=(2,), samples=4, seed=7,
        grids={tid: cells for tid in ("lin_squared_mapped", "lin_squared_means",
                                      "lin_chain")})
    report = run_campaign(config)
    assert len(report.cells) == 3 * len(cells)
    assert report.total_violations == 0


def test_extremal_instance_carries_the_worst_draw():
    config = CampaignConfig(theorem_ids=("lemma_amgm",), dims=(3,), samples=8, seed=5)
    report = run_campaign(config)
    (cell,) = report.cells
    ex = cell.extremal
    assert ex is not None
    assert ex["theorem_id"] == "lemma_amgm"
    assert ex["ratio"] == cell.max_ratio
    assert ex["dim"] == 3
    instance = ex["instance"]
    assert isinstance(instance["a"], list) and len(instance["a"]) == 3
    assert isinstance(instance["b"], list)


def test_eigen_pairs_make_wielandt_scalar_tight():
    config = CampaignConfig(theorem_ids=("wielandt_scalar",), dims=(3,), samples=4,
                            seed=2)
    report = run_campaign(config)
    (cell,) = report.cells
    # the (v_min +- v_max)/sqrt2 combination attains the bound exactly
    assert cell.max_ratio == pytest.approx(1.0, abs=1e-9)
    assert cell.near_tight >= 4
    assert cell.violations == 0


def test_total_checks_counts_every_record():
    config = CampaignConfig(theorem_ids=("scalar_amgm", "lin_chain"), dims=(2,),
                            samples=3, seed=0)
    report = run_campaign(config)
    by_id = {cell.theorem_id: cell for cell in report.cells}
    assert by_id["scalar_amgm"].samples == 3
    assert by_id["lin_chain"].samples == 3 * 7
    assert report.total_checks == 3 + 21
