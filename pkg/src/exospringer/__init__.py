"""Exact tools for the exotic nilpotent cone and its Springer correspondence.

Submodules:
  ffield     exact linear algebra over F_p (p odd prime)
  bicomb     partition/bipartition combinatorics and the closure order
  symplectic the theta-structures, log map and normal-form pairs
  classify   orbit classification and stabilizer dimensions
  hyperoct   hyperoctahedral character theory
  springer   the Springer table and its inductive determination
  census     brute-force finite-field verification
  cli        command line interface
"""

__version__ = "0.1.0"
