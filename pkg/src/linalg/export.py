"""
Text emission for matrices and polynomials.

Output is byte-deterministic: fixed key order, integers written in plain
decimal, one trailing newline.
"""
import csv
import io
import json

from .matrix import IntMatrix
from .polynomial import IntPolynomial


def matrix_to_csv(a: IntMatrix) -> str:
    """One line per row, comma-separated integers."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for i in range(a.rows):
        writer.writerow(a.row(i))
    return buffer.getvalue()


def matrix_to_json(a: IntMatrix) -> str:
    """
    JSON object with the shape and nested rows, one row per line.

    Args:
        a: Matrix to emit

    Returns:
        JSON text ending in a newline
    """
    rows = ",\n".join("    " + json.dumps(list(a.row(i)), separators=(', ', ': ')) for i in range(a.rows))
    body = f"[\n{rows}\n  ]" if a.rows else "[]"
    return f'{{\n  "rows": {a.rows},\n  "cols": {a.cols},\n  "entries": {body}\n}}\n'


def polynomial_to_json(p: IntPolynomial) -> str:
    """Coefficient list in ascending degree."""
    return json.dumps({'coefficients': p.to_list()}) + "\n"
