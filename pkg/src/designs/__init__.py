"""
Block designs: axioms, constructions, published fixtures and design files.

Modules are imported directly (``from src.designs.core import new_design``);
this package re-exports nothing because src.models.design depends on
src.designs.counting.
"""
