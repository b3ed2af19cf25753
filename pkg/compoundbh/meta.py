"""
    compoundbh/meta
    ~~~~~~~~~~~~~~~

    Contains information about the package.
"""
AUTHOR_NAME = 'compoundbh developers'
AUTHOR_EMAIL = 'compoundbh@flyingdice.dev'
AUTHOR = 'compoundbh developers <compoundbh@flyingdice.dev>'
NAME = 'compoundbh'
VERSION = '0.1.0'
TAGLINE = 'Benjamini-Hochberg for compound p-values, worst-case constructions and FDR verification.'
URL = 'https://github.com/flyingdice/compoundbh'
LICENSE = 'GPLv3'
