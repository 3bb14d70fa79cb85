"""
Reproduction of the published worked examples against embedded golden data.
"""
