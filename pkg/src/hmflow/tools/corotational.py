#---------------------------------------------------------------------------------------------------
__all__ = (
    'click_main',
    'main',
)

import click

from ..flow.initial import corotational_data
from ..flow.stepper import run_corotational
from .report import configure_logging, guarded
from .runs import run_and_report
from .scenario import CorotationalScenario, common_options, load_scenario

#---------------------------------------------------------------------------------------------------
@click.command()
@common_options
@guarded
def click_main(config_path, out_dir, as_json, seed, overrides, verbose):
    '''
    Run the corotational angle equation from a bubble of scale lambda0 and report the blow-up
    summary: fitted rate exponent, energy in the shrinking ball and degree.
    '''
    configure_logging(verbose)
    cfg = load_scenario(CorotationalScenario, config_path, overrides)
    v0 = corotational_data(cfg.lambda0, cfg.center, cfg.delta, cfg.grid(), cfg.mode)
    run_and_report('Corotational run', run_corotational, v0, cfg, out_dir, as_json)

#---------------------------------------------------------------------------------------------------
def main():
    click_main()

#---------------------------------------------------------------------------------------------------
if __name__ == '__main__':
    main()
