"""
Block intersection multigraphs and graphs, and their Graphviz DOT export.
"""
