#---------------------------------------------------------------------------------------------------
__all__ = (
    'run_and_report',
    'run_summary',
)

import numpy as np

from ..flow.diagnostics import degree, fit_blowup_time
from ..flow.snapshot import write_diagnostics, write_snapshot
from ..types.errors import DivergenceError, DomainError, NumericalError
from .report import dump_json, render_summary, warning
from .scenario import output_dir

#---------------------------------------------------------------------------------------------------
def run_summary(result):
    ''' Summary of a finished run; a refused blow-up fit leaves T_hat and rate_exponent None. '''
    diag = result.diagnostics
    max_grad = diag.column('max_grad')
    summary = {
        'reason': result.reason,
        'steps': result.steps,
        't_final': result.field.t,
        'max_grad_growth': float(max_grad[-1] / max_grad[0]) if max_grad[0] > 0 else None,
        'lambda_final': diag.column('lambda_est')[-1],
        'T_hat': None,
        'rate_exponent': None,
        'energy_quantum': diag.column('e_ball')[-1],
        'energy_total': diag.column('e_total')[-1],
        'degree': degree(result.field),
    }
    try:
        fit = fit_blowup_time(diag.column('t'), diag.column('lambda_est'))
    except (DomainError, NumericalError) as e:
        warning(None, f'No blow-up fit: {e}')
    else:
        summary['T_hat'] = fit.T_hat
        summary['rate_exponent'] = fit.gamma
    return {k: (None if isinstance(v, float) and not np.isfinite(v) else v)
            for k, v in summary.items()}

def run_and_report(title, run, initial, cfg, out_dir, as_json):
    '''
    Runs a simulation from the initial field and writes snapshot_initial.csv,
    snapshot_final.csv and diagnostics.csv. A diverged run leaves snapshot_diverged.csv with the
    last valid state before the error propagates.
    '''
    out = output_dir(out_dir)
    outputs = [write_snapshot(out / 'snapshot_initial.csv', initial)]
    try:
        result = run(initial, cfg)
    except DivergenceError as e:
        if e.snapshot is not None:
            write_snapshot(out / 'snapshot_diverged.csv', e.snapshot)
        raise
    outputs.append(write_snapshot(out / 'snapshot_final.csv', result.field))
    outputs.append(write_diagnostics(out / 'diagnostics.csv', result.diagnostics))

    summary = run_summary(result)
    if as_json:
        dump_json({**summary, 'outputs': [str(p) for p in outputs]})
    else:
        render_summary(title, summary, outputs)
    return result
