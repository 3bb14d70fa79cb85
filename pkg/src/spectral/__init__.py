"""
Closed-form spectra of M M^T and the exact verifier that certifies them.
"""
