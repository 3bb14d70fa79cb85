"""
Design file reading and writing.

Format: {"v": <int>, "blocks": [[int, ...], ...]}. The order of the blocks
array is authoritative; emission writes points ascending within each block.
"""
import json
import logging
from pathlib import Path
from typing import List, Tuple, Union

from src.errors import ParseError
from src.models.design import Design

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_design_text(text: str, source: str = '<string>') -> Tuple[int, List[List[int]]]:
    """
    Parse design-file text into raw (v, blocks) without checking the axioms.

    Args:
        text: JSON text
        source: Name used in error messages

    Returns:
        Tuple of (v, blocks)

    Raises:
        ParseError: On malformed JSON (with line and column) or wrong structure
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, exc.msg, exc.lineno, exc.colno) from exc

    if not isinstance(data, dict):
        raise ParseError(source, "top level must be an object with keys 'v' and 'blocks'")
    v = data.get('v')
    blocks = data.get('blocks')
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(source, "'v' must be an integer")
    if not isinstance(blocks, list):
        raise ParseError(source, "'blocks' must be an array of arrays")
    for i, block in enumerate(blocks, start=1):
        if not isinstance(block, list):
            raise ParseError(source, f"block {i} must be an array of integers")
        for point in block:
            if isinstance(point, bool) or not isinstance(point, int):
                raise ParseError(source, f"block {i} contains non-integer {point!r}")
    return v, blocks


def read_design_data(path: PathLike) -> Tuple[int, List[List[int]]]:
    """
    Read raw (v, blocks) from a design file.

    Args:
        path: File path

    Returns:
        Tuple of (v, blocks)

    Raises:
        ParseError: If the file is missing or malformed
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise ParseError(str(path), f"cannot read file ({exc.strerror})") from exc
    return parse_design_text(text, str(path))


def load_design(path: PathLike) -> Design:
    """
    Read and validate a design file.

    Args:
        path: File path

    Returns:
        Validated Design

    Raises:
        ParseError: If the file is malformed
        DesignValidationError: If the blocks break a BIBD axiom
    """
    v, blocks = read_design_data(path)
    design = Design.from_dict({'v': v, 'blocks': blocks})
    logger.debug("Design loaded", extra={'path': str(path), 'params': design.params.to_dict()})
    return design


def dump_design(design: Design) -> str:
    """
    Serialize a design in canonical form.

    Blocks are written one per line so files diff cleanly.

    Args:
        design: Design to serialize

    Returns:
        JSON text ending with a newline
    """
    lines = [json.dumps(list(block)) for block in design.blocks]
    body = ',\n    '.join(lines)
    return f'{{\n  "v": {design.v},\n  "blocks": [\n    {body}\n  ]\n}}\n'


def write_design(design: Design, path: PathLike) -> None:
    """
    Write a design file.

    Args:
        design: Design to write
        path: Destination path
    """
    Path(path).write_text(dump_design(design), encoding='utf-8')
    logger.debug("Design written", extra={'path': str(path), 'b': design.b})
