#---------------------------------------------------------------------------------------------------
__all__ = (
    'click_main',
    'main',
)

import click

from . import corotational, flow, gamma, identities, norms, reduced

#---------------------------------------------------------------------------------------------------
@click.group()
def click_main():
    '''
    Numerical experiments on blow-up of the axisymmetric harmonic map flow.

    Exit status is 0 on success, 1 for invalid input, 2 for numerical failure and 3 for I/O
    errors.
    '''

click_main.add_command(identities.click_main, 'identities')
click_main.add_command(gamma.click_main, 'gamma')
click_main.add_command(reduced.click_main, 'reduced')
click_main.add_command(corotational.click_main, 'corotational')
click_main.add_command(flow.click_main, 'flow')
click_main.add_command(norms.click_main, 'norms')

#---------------------------------------------------------------------------------------------------
def main():
    click_main()

#---------------------------------------------------------------------------------------------------
if __name__ == '__main__':
    main()
