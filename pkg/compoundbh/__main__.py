"""
    compoundbh/__main__
    ~~~~~~~~~~~~~~~~~~~

    Contains package entrypoint.
"""
from compoundbh import cli

cli.run()
