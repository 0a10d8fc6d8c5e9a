"""Exact algorithms for Littlewood-Richardson, Kronecker and plethysm
constants, lattice points of rational polytopes, crystals, Plücker
straightening and finite-group invariants."""

__version__ = "0.1.0"
