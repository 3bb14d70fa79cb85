"""
Mutual incidence matrices, the point-block embedding, Z vectors and the
block-counting identities.
"""
