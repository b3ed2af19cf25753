"""
    compoundbh
    ~~~~~~~~~~

    Benjamini-Hochberg for compound p-values, worst-case constructions and FDR verification.
"""
from . import meta

__version__ = meta.VERSION
__author__ = meta.AUTHOR
