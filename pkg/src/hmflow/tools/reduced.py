#---------------------------------------------------------------------------------------------------
__all__ = (
    'click_main',
    'main',
)

import click
import numpy as np

from ..flow.diagnostics import fit_blowup_time
from ..flow.snapshot import write_csv
from ..modulation.data import check_cond_z0, default_z0_field
from ..modulation.rate import predicted_p
from ..types.errors import DomainError, NumericalError
from .report import configure_logging, dump_json, guarded, render_summary, warning
from .scenario import ReducedScenario, common_options, load_scenario, output_dir

COLUMNS = ('t', 'xi1', 'xi2', 'lambda_star', 're_p', 'im_p', 'ratio')

#---------------------------------------------------------------------------------------------------
def _rate_exponent(traj):
    try:
        return fit_blowup_time(traj.t, np.abs(traj.p)).gamma
    except (DomainError, NumericalError) as e:
        warning(None, f'No rate fit: {e}')
        return None

#---------------------------------------------------------------------------------------------------
@click.command()
@common_options
@guarded
def click_main(config_path, out_dir, as_json, seed, overrides, verbose):
    '''
    Predict the scale and rotation p(t) and the center xi(t) from the reduced dynamics. Writes
    the trajectory to reduced.csv and prints kappa, the |p| / lambda_* band and the fitted rate.
    '''
    configure_logging(verbose)
    cfg = load_scenario(ReducedScenario, config_path, overrides)

    field = None
    cond = None
    if cfg.a0_star is None:
        field = default_z0_field(cfg.q, cfg.amplitude, cfg.cutoff_radius)
        cond = check_cond_z0(field, cfg.q, cfg.T, cfg.alpha0, cfg.alpha1, cfg.cutoff_radius)
        for row in cond:
            if not row['ok']:
                warning(None, f'Condition {row["name"]} fails: {row["value"]:.6g} against '
                              f'{row["bound"]:.6g}.')

    traj = predicted_p(cfg, field, cfg.n_xi_steps, **cfg.inverse_args())
    path = write_csv(output_dir(out_dir) / 'reduced.csv', COLUMNS, traj.rows())

    inverse = traj.inverse
    summary = {
        'T': cfg.T,
        'a0': traj.a0,
        'kappa': traj.kappa,
        'kappa_vs_plus_a0': traj.sign_fits['+'],
        'kappa_vs_minus_a0': traj.sign_fits['-'],
        'ratio_band': traj.ratio_band(),
        'rate_exponent': _rate_exponent(traj),
        'converged': inverse.converged,
        'iterations': len(inverse.trace) - 1,
        'residual': inverse.residual,
        'b0_residual': inverse.b0_residual,
        'xi_error': traj.xi.max_error(cfg.r0, cfg.T),
        'inner_region_clear': traj.inner_region_clear(),
    }
    if as_json:
        report = {**summary, 'csv': str(path), 'trace': list(inverse.trace)}
        if cond is not None:
            report['conditions'] = cond.rows
        dump_json(report)
    else:
        if cond is not None:
            summary['conditions'] = 'hold' if cond.ok else 'violated'
        render_summary('Reduced dynamics', summary, [path])

#---------------------------------------------------------------------------------------------------
def main():
    click_main()

#---------------------------------------------------------------------------------------------------
if __name__ == '__main__':
    main()
