"""
Tests for design-spectra.
"""
