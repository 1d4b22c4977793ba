#---------------------------------------------------------------------------------------------------
__all__ = (
    'click_main',
    'main',
)

import click

from ..flow.initial import initial_data
from ..flow.stepper import run_flow
from ..types.state import ModulationState
from .report import configure_logging, guarded
from .runs import run_and_report
from .scenario import FlowScenario, common_options, load_scenario

#---------------------------------------------------------------------------------------------------
@click.command()
@common_options
@guarded
def click_main(config_path, out_dir, as_json, seed, overrides, verbose):
    '''
    Run the axisymmetric harmonic map flow from a cut-off bubble and report the blow-up summary.
    '''
    configure_logging(verbose)
    cfg = load_scenario(FlowScenario, config_path, overrides)
    state = ModulationState(cfg.lambda0, cfg.omega, cfg.center)
    u0 = initial_data(state, cfg.delta, cfg.grid())
    run_and_report('Map flow run', run_flow, u0, cfg, out_dir, as_json)

#---------------------------------------------------------------------------------------------------
def main():
    click_main()

#---------------------------------------------------------------------------------------------------
if __name__ == '__main__':
    main()
