"""
Data models for designs, incidence objects, reports and graphs.

Design itself lives in src.models.design and is imported from there, since
its validation depends on src.designs.counting.
"""
from .design_params import DesignParams
from .difference_set import DifferenceSetSpec
from .validation_report import ValidationReport
from .incidence import DeltaProfile, MutualIncidenceMatrix, ZVector
from .spectral_report import CheckResult, SpectralReport
from .graph import Multigraph, SimpleGraph
from .example_outcome import ExampleOutcome

__all__ = [
    'CheckResult',
    'DeltaProfile',
    'DesignParams',
    'DifferenceSetSpec',
    'ExampleOutcome',
    'Multigraph',
    'MutualIncidenceMatrix',
    'SimpleGraph',
    'SpectralReport',
    'ValidationReport',
    'ZVector',
]
