"""
Construction recipes: a small text language naming a design.

    recipe := term (("+" | "-") term)*
    term   := ["complement:"] atom
    atom   := <fixture name> | trivial:V | complete:V:K | cyclic:V:a,b,...

"+" joins block lists (union_design) and "-" removes blocks
(multiset_difference), applied left to right. Examples: "fano",
"complete:7:3-fano", "complement:cyclic:11:1,3,4,5,9", "fano+fano".
"""
import re
from typing import List

from src.errors import UsageError
from src.models.design import Design
from src.models.difference_set import DifferenceSetSpec
from .constructions import complement_design, complete_design, cyclic_design, multiset_difference, trivial_design, union_design
from .fixtures import FIXTURES, fixture

COMPLEMENT_PREFIX = 'complement:'


def _integer(text: str, recipe: str) -> int:
    if not text.isdigit():
        raise UsageError(f"expected a positive integer, got '{text}' in recipe '{recipe}'")
    return int(text)


def _atom(text: str, recipe: str) -> Design:
    """Build the design named by a single atom."""
    if text in FIXTURES:
        return fixture(text)
    name, _, rest = text.partition(':')
    fields: List[str] = rest.split(':') if rest else []

    if name == 'trivial' and len(fields) == 1:
        return trivial_design(_integer(fields[0], recipe))
    if name == 'complete' and len(fields) == 2:
        return complete_design(_integer(fields[0], recipe), _integer(fields[1], recipe))
    if name == 'cyclic' and len(fields) == 2:
        base = [_integer(x, recipe) for x in fields[1].split(',')]
        return cyclic_design(DifferenceSetSpec.create_new(_integer(fields[0], recipe), base))

    raise UsageError(
        f"unknown construction '{text}' in recipe '{recipe}'; expected a fixture "
        f"({', '.join(sorted(FIXTURES))}), trivial:V, complete:V:K or cyclic:V:a,b,..."
    )


def _term(text: str, recipe: str) -> Design:
    if text.startswith(COMPLEMENT_PREFIX):
        return complement_design(_atom(text[len(COMPLEMENT_PREFIX):], recipe))
    return _atom(text, recipe)


def build_from_recipe(recipe: str) -> Design:
    """
    Build the design a recipe describes.

    Args:
        recipe: Recipe text, whitespace ignored

    Returns:
        The constructed Design

    Raises:
        UsageError: If the recipe is malformed
        ConstructionError: If a construction step fails
    """
    compact = re.sub(r'\s+', '', recipe)
    if not compact:
        raise UsageError("empty construction recipe")
    parts = re.split(r'([+-])', compact)
    if any(not part for part in parts[::2]):
        raise UsageError(f"dangling operator in recipe '{recipe}'")

    design = _term(parts[0], recipe)
    for operator, text in zip(parts[1::2], parts[2::2]):
        operand = _term(text, recipe)
        design = union_design(design, operand) if operator == '+' else multiset_difference(design, operand)
    return design
