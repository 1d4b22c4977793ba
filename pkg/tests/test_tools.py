#---------------------------------------------------------------------------------------------------
import io
import json

import numpy as np
import pytest
from click.testing import CliRunner

from hmflow.flow.diagnostics import BlowupDiagnostics
from hmflow.flow.grid import MapField, default_grid
from hmflow.flow.stepper import RunResult
from hmflow.tools.cli import click_main
from hmflow.tools.gamma import tabulate_gamma
from hmflow.tools.identities import run_identities
from hmflow.tools.norms import bubble_difference_norms
from hmflow.tools.parser import load, load_path, parse_overrides
from hmflow.tools.report import dump_json, render_summary
from hmflow.tools.runs import run_summary
from hmflow.tools.scenario import (
    FlowScenario, GammaConfig, IdentitiesConfig, NormsScenario, ReducedScenario, load_scenario,
)
from hmflow.types.errors import ConfigError, OutputError

def invoke(*args):
    return CliRunner().invoke(click_main, [str(a) for a in args])

def json_report(result):
    # Diagnostics may share the stream with the report; the report is the outermost object.
    text = result.output
    return json.loads(text[text.index('{'):text.rindex('}') + 1])

#---------------------------------------------------------------------------------------------------
def test_load_both_styles():
    data = load(io.StringIO('T = 0.01\nr0: 1.5\n# comment\nscheme = rk2\n'), 'test.cfg')
    assert data == {'T': 0.01, 'r0': 1.5, 'scheme': 'rk2'}
    assert data.___origins___['r0'].___metadata___.line == 2
    assert data.___origins___['scheme'].___metadata___.path == 'test.cfg'

def test_load_empty():
    assert load(io.StringIO('')) == {}

@pytest.mark.parametrize('text', [
    '- 1\n- 2\n',
    'grid:\n  nr: 4\n',
    'T: [0.1\n',
])
def test_load_rejects(text):
    with pytest.raises(ConfigError):
        load(io.StringIO(text))

def test_load_missing_file(tmp_path):
    with pytest.raises(OutputError):
        load_path(tmp_path / 'absent.yaml')

def test_overrides():
    data = parse_overrides(['n=4', 'tau_min=1e-3', 'center=[1.0, 0.5]', 'scheme = rk2'])
    assert data == {'n': 4, 'tau_min': '1e-3', 'center': '[1.0, 0.5]', 'scheme': 'rk2'}
    assert data.___origins___['tau_min'].___metadata___.line == 2
    with pytest.raises(ConfigError):
        parse_overrides(['n'])

#---------------------------------------------------------------------------------------------------
def test_scenario_defaults_and_overrides(tmp_path):
    path = tmp_path / 'flow.cfg'
    path.write_text('nr = 32\nnz = 32\nscheme = rk2\n')
    cfg = load_scenario(FlowScenario, path, ['center=(1.0, 0.2)', 't_end=1e-3'])
    assert (cfg.nr, cfg.nz, cfg.scheme) == (32, 32, 'rk2')
    assert cfg.center == (1.0, 0.2)
    assert cfg.t_end == 1e-3
    assert cfg.grid().shape == (33, 33)
    assert cfg.cfl == 0.1

def test_scenario_unknown_key_is_located():
    with pytest.raises(ConfigError) as info:
        load_scenario(GammaConfig, None, ['n=4', 'size=3'])
    assert info.value.source.___metadata___.path == '<command line>'
    assert info.value.source.___metadata___.line == 2

def test_scenario_bad_value_is_located(tmp_path):
    path = tmp_path / 'gamma.yaml'
    path.write_text('tau_min: 1e-6\nn: -3\n')
    with pytest.raises(ConfigError) as info:
        load_scenario(GammaConfig, path)
    assert info.value.source.___metadata___.line == 2

def test_scenario_cross_checks():
    with pytest.raises(ConfigError):
        load_scenario(GammaConfig, None, ['tau_min=2', 'tau_max=1'])
    with pytest.raises(ConfigError):
        load_scenario(ReducedScenario, None, [])
    with pytest.raises(ConfigError):
        load_scenario(NormsScenario, None, ['outer_min=0.5', 'outer_max=0.2'])

def test_reduced_scenario_inverse_arguments():
    cfg = load_scenario(ReducedScenario, None, ['T=0.01', 'n=50'])
    assert cfg.inverse_args() == {'alpha': 0.25, 'n': 50, 'damping': 0.5, 'max_iter': 60,
                                  'sigma_min': 1e-6}

#---------------------------------------------------------------------------------------------------
def test_json_report_types():
    stream = io.StringIO()
    dump_json({'kappa': -1 + 0.5j, 'nan': float('nan'), 'ok': np.bool_(True),
               'rows': np.arange(2)}, stream)
    assert json.loads(stream.getvalue()) == {'kappa': {'re': -1.0, 'im': 0.5}, 'nan': 'nan',
                                             'ok': True, 'rows': [0, 1]}

def test_summary_rendering():
    stream = io.StringIO()
    render_summary('Title', {'kappa': 1 - 2j, 'T_hat': None, 'steps': 3}, ['out.csv'], stream)
    text = stream.getvalue()
    assert text.splitlines()[0] == 'Title'
    assert '1-2i' in text
    assert 'n/a' in text
    assert 'out.csv' in text

#---------------------------------------------------------------------------------------------------
def test_identities_hold():
    table = run_identities(IdentitiesConfig(), seed=0)
    failed = [row for row in table.rows if not row['ok']]
    assert not failed
    assert {row['suite'] for row in table.rows} == {'moments', 'kernels', 'modes', 'projection'}

def test_identities_command():
    result = invoke('identities', '--json', '--seed', 5)
    assert result.exit_code == 0
    report = json_report(result)
    assert report['seed'] == 5
    assert report['passed'] == report['total']

def test_identities_perturbed():
    result = invoke('identities', '--perturb')
    assert result.exit_code == 2
    assert 'FAIL' in result.output

#---------------------------------------------------------------------------------------------------
def test_gamma_table():
    rows, fits = tabulate_gamma(1e-4, 1e2, 7)
    assert len(rows) == 7
    assert rows[0]['tau'] == pytest.approx(1e-4)
    assert not any(row['flag'] for row in rows)
    assert rows[0]['gamma1'] == pytest.approx(1.0, abs=1e-2)
    assert fits[1].large > 0

def test_gamma_command(tmp_path):
    result = invoke('gamma', '--range', 1e-3, 10, '--n', 4, '--out', tmp_path, '--json')
    assert result.exit_code == 0
    report = json_report(result)
    assert report['n'] == 4
    assert report['flagged_rows'] == 0
    lines = (tmp_path / 'gamma.csv').read_text().splitlines()
    assert lines[0] == 'tau,gamma1,gamma2,flag'
    assert len(lines) == 5

def test_gamma_single_point(tmp_path):
    result = invoke('gamma', '--range', 1e-3, 10, '--n', 1, '--out', tmp_path)
    assert result.exit_code == 0
    assert len((tmp_path / 'gamma.csv').read_text().splitlines()) == 2

def test_gamma_inverted_range(tmp_path):
    result = invoke('gamma', '--range', 10, 1, '--out', tmp_path)
    assert result.exit_code == 2
    assert not (tmp_path / 'gamma.csv').exists()

def test_gamma_bad_override(tmp_path):
    result = invoke('gamma', '--set', 'n=many', '--out', tmp_path)
    assert result.exit_code == 1
    assert '<command line>' in result.output

#---------------------------------------------------------------------------------------------------
def test_reduced_needs_horizon(tmp_path):
    result = invoke('reduced', '--out', tmp_path)
    assert result.exit_code == 1
    assert '"T"' in result.output

def test_reduced_command(tmp_path):
    result = invoke('reduced', '-s', 'T=0.01', '-s', 'n=40', '--out', tmp_path, '--json')
    assert result.exit_code == 0
    report = json_report(result)
    assert report['converged']
    assert report['a0'] == {'re': pytest.approx(0.075), 'im': pytest.approx(0.0)}
    assert all(row['ok'] for row in report['conditions'])
    lines = (tmp_path / 'reduced.csv').read_text().splitlines()
    assert lines[0] == 't,xi1,xi2,lambda_star,re_p,im_p,ratio'
    assert len(lines) == 41

def test_reduced_degenerate_datum(tmp_path):
    result = invoke('reduced', '-s', 'T=0.01', '-s', 'a0_star=0', '--out', tmp_path)
    assert result.exit_code == 1

#---------------------------------------------------------------------------------------------------
SMALL_RUN = ('-s', 'nr=32', '-s', 'nz=32', '-s', 'lambda0=0.1', '-s', 't_end=1e-3')

@pytest.mark.parametrize('command, title', [
    ('corotational', 'Corotational run'),
    ('flow', 'Map flow run'),
])
def test_simulation_commands(tmp_path, command, title):
    result = invoke(command, *SMALL_RUN, '--out', tmp_path)
    assert result.exit_code == 0
    assert title in result.output
    for name in ('snapshot_initial.csv', 'snapshot_final.csv', 'diagnostics.csv'):
        assert (tmp_path / name).exists()

def test_summary_without_a_blowup(capsys):
    diag = BlowupDiagnostics()
    for t in np.linspace(0.0, 0.05, 12):
        diag.records.append({'t': t, 'max_grad': 40.0, 'lambda_est': 0.05 * (1 + t),
                             'xi1_est': 1.0, 'xi2_est': 0.0, 'e_total': 12.0, 'e_ball': 12.0,
                             'e_weighted': 75.0})
    field = MapField.constant(default_grid(4), t=0.05)
    summary = run_summary(RunResult(field, diag, 't_end', 100))
    assert summary['rate_exponent'] is None
    assert summary['T_hat'] is None
    assert summary['max_grad_growth'] == 1.0
    assert 'No blow-up fit' in capsys.readouterr().err

def test_simulation_geometry_error(tmp_path):
    result = invoke('flow', *SMALL_RUN, '-s', 'delta=0.6', '--out', tmp_path)
    assert result.exit_code == 1

def test_simulation_unwritable_output(tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('')
    result = invoke('flow', *SMALL_RUN, '--out', blocker / 'sub')
    assert result.exit_code == 3

#---------------------------------------------------------------------------------------------------
def test_bubble_difference_norms():
    norms = bubble_difference_norms(NormsScenario({'n_times': 4, 'n_radii': 16,
                                                   'n_angles': 8}))
    assert set(norms) == {'nu_a', 'star', 'starstar', 'triple', 'sharp', 'theta_l', 'star_k'}
    assert all(np.isfinite(v) and v > 0 for v in norms.values())

def test_norms_scale_with_eps():
    small = bubble_difference_norms(NormsScenario({'eps': 1e-4, 'n_times': 4}))
    large = bubble_difference_norms(NormsScenario({'eps': 2e-4, 'n_times': 4}))
    assert large['theta_l'] == pytest.approx(2 * small['theta_l'])
    assert large['nu_a'] == pytest.approx(2 * small['nu_a'], rel=1e-2)

def test_norms_command():
    result = invoke('norms', '--json', '-s', 'n_times=4')
    assert result.exit_code == 0
    assert set(json_report(result)) >= {'nu_a', 'sharp', 'star_k'}
