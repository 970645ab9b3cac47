"""Quick end-to-end exercise of the betheotto Python module.

Run as a plain script; any failure raises and the exit code goes non-zero.
"""

import math

import betheotto as bo


def close(a, b, rel=1e-9):
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


def main():
    assert bo.__version__ == "1.0.0"

    # spectrum basics
    params = bo.SpectrumParams(n_particles=2, box_length=1.0, interaction=1.0)
    ground = bo.solve_bethe([1, 1], params)
    assert close(ground.energy, 11.2660685201, rel=1e-6), ground.energy
    assert ground.residual_norm <= 1e-10
    assert ground.k[0] < ground.k[1]
    assert "BetheSolution" in repr(ground)

    assert len(bo.enumerate_states(2, 3)) == 6
    assert bo.state_count(4, 20) == 8855
    assert close(bo.free_boson_energy([1, 2], params), 2.5 * math.pi**2, rel=1e-12)

    # the independent solvers agree
    oracle = bo.bisection_bethe_2p([1, 1], params)
    assert abs(oracle.k[0] - ground.k[0]) < 1e-8
    assert abs(oracle.k[1] - ground.k[1]) < 1e-8

    # thermal layer
    ep = bo.EnsembleParams()
    ep.temperature = 8.0
    ep.spectrum = params
    ensemble = bo.build_ensemble(ep)
    assert close(sum(ensemble.probabilities), 1.0, rel=1e-12)
    assert ensemble.entropy > 0.0

    # ideal engine in the free limit
    cfg = bo.CycleConfig()
    result = bo.run_cycle(cfg)
    assert result.valid_engine
    assert abs(result.efficiency - 0.75) < 1e-9, result.efficiency
    assert result.W_out > 0.0
    assert result.corner_entropy[1] == result.corner_entropy[2]

    # the efficiency dip
    dip = bo.find_dip(1.0, 100.0, cfg)
    assert dip.interior
    assert close(dip.c_star, 16.5326, rel=1e-2), dip.c_star
    assert abs(dip.eta_min - 0.7359326) < 1e-4, dip.eta_min

    # sweeps serialize to CSV
    grid = bo.CGrid()
    grid.c_min, grid.c_max, grid.points = 0.1, 10.0, 5
    table = bo.sweep_c(grid, cfg)
    assert len(table) == 5
    csv = table.to_csv()
    assert csv.startswith("c,efficiency,Q1,W_out,valid_engine")
    assert csv == bo.sweep_c(grid, cfg).to_csv()

    # error mapping
    bad = bo.CycleConfig()
    bad.trap_small, bad.trap_large = 2.0, 1.0
    try:
        bo.run_cycle(bad)
    except ValueError:
        pass
    else:
        raise AssertionError("invalid geometry must raise ValueError")

    starved = bo.CycleConfig()
    starved.n_cut = 2
    try:
        bo.run_cycle(starved)
    except bo.UnderResolvedTailError:
        pass
    else:
        raise AssertionError("a 3-level table cannot hold a T = 50 ensemble")

    # built-in verification (reduced set)
    ok, report, results = bo.verify(quick=True)
    assert ok, report
    assert all(r.passed for r in results)

    print("smoke OK")


if __name__ == "__main__":
    main()
