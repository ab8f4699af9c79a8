"""Spectral toolkit for the Robin Laplacian with negative boundary parameter.

Subpackages cover four layers of the computation:

* :mod:`robingap.hypergeom` -- overflow-safe confluent hypergeometric series
  and supporting combinatorial functions.
* :mod:`robingap.schrodinger` -- the radial Coulomb-type eigenvalue problem on
  balls, solved both through a transcendental equation in Kummer functions and
  through an independent shooting integrator.
* :mod:`robingap.cone` -- closed-form ground state of the infinite cone and
  the two-bump trial upper bound for the double cone's second eigenvalue.
* :mod:`robingap.meshing` / :mod:`robingap.fem` -- P1 finite elements on
  convex polygons (double cones, truncated double cones) plus the 1-D
  interval comparison problem.
* :mod:`robingap.studies` -- reproducible parameter sweeps, decay-rate fits
  and CSV/SVG emission, wired together by the ``robin-gap`` CLI.
"""

__version__ = "0.1.0"
