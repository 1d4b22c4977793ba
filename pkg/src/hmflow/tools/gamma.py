#---------------------------------------------------------------------------------------------------
__all__ = (
    'click_main',
    'main',
    'tabulate_gamma',
)

import click
import numpy as np

from ..flow.snapshot import write_csv
from ..volterra.gamma import fit_bounds, gamma_panels
from .report import configure_logging, dump_json, guarded, render_summary, warning
from .scenario import GammaConfig, common_options, load_scenario, output_dir

COLUMNS = ('tau', 'gamma1', 'gamma2', 'flag')

#---------------------------------------------------------------------------------------------------
def tabulate_gamma(tau_min, tau_max, n, split=1.0):
    '''
    Gamma_1 and Gamma_2 on n log-spaced points of [tau_min, tau_max]. Rows whose quadrature
    produced a non-finite value carry flag 1.
    '''
    tau = np.geomspace(tau_min, tau_max, n)
    values = {l: gamma_panels(l, tau) for l in (1, 2)}
    flags = ~(np.isfinite(values[1]) & np.isfinite(values[2]))
    rows = [
        {'tau': tau[i], 'gamma1': values[1][i], 'gamma2': values[2][i], 'flag': int(flags[i])}
        for i in range(n)
    ]
    fits = {l: fit_bounds(tau[~flags], values[l][~flags], split) for l in (1, 2)}
    return rows, fits

#---------------------------------------------------------------------------------------------------
@click.command()
@common_options
@click.option('--range', 'tau_range', type=float, nargs=2, metavar='MIN MAX',
              help='Tabulation range of tau, overriding the configuration.')
@click.option('--n', 'n_points', type=int, help='Number of tau values.')
@guarded
def click_main(config_path, out_dir, as_json, seed, overrides, verbose, tau_range, n_points):
    '''
    Tabulate the nonlocal kernel functions Gamma_1, Gamma_2 to gamma.csv together with the fitted
    constants of their small and large tau bounds.
    '''
    configure_logging(verbose)
    if tau_range and not 0 < tau_range[0] < tau_range[1]:
        raise click.BadParameter(f'need 0 < MIN < MAX, got {tau_range[0]:g} {tau_range[1]:g}',
                                 param_hint='--range')
    if n_points is not None and n_points < 1:
        raise click.BadParameter(f'need at least one point, got {n_points}', param_hint='--n')

    overrides = list(overrides)
    if tau_range:
        overrides += [f'tau_min={tau_range[0]!r}', f'tau_max={tau_range[1]!r}']
    if n_points is not None:
        overrides.append(f'n={n_points}')
    cfg = load_scenario(GammaConfig, config_path, overrides)

    rows, fits = tabulate_gamma(cfg.tau_min, cfg.tau_max, cfg.n, cfg.split)
    flagged = sum(row['flag'] for row in rows)
    if flagged:
        warning(None, f'{flagged} rows failed to integrate and are flagged.')
    path = write_csv(output_dir(out_dir) / 'gamma.csv', COLUMNS, rows)

    summary = {
        'tau_min': cfg.tau_min,
        'tau_max': cfg.tau_max,
        'n': cfg.n,
        'gamma1_at_tau_min': rows[0]['gamma1'],
        'gamma2_at_tau_min': rows[0]['gamma2'],
        'gamma1_small_const': fits[1].small,
        'gamma1_large_const': fits[1].large,
        'gamma2_small_const': fits[2].small,
        'gamma2_large_const': fits[2].large,
        'flagged_rows': flagged,
    }
    if as_json:
        dump_json({**summary, 'csv': str(path)})
    else:
        render_summary('Gamma table', summary, [path])

#---------------------------------------------------------------------------------------------------
def main():
    click_main()

#---------------------------------------------------------------------------------------------------
if __name__ == '__main__':
    main()
