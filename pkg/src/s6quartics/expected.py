"""Access to the embedded expected-table data and its exact value expressions."""

from __future__ import annotations

import ast
import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .algebra.scalars import QuadraticNumber, Scalar, divide

TABLE_IDS = ("thm3.1", "lemma3.5", "tau_values", "thm5.7", "cor5.3", "cor5.6", "lemma5.8", "lemma5.10", "cor4.4")
UNRESOLVED = "unresolved"


@lru_cache(maxsize=1)
def expected_tables() -> dict:
    text = resources.files("s6quartics").joinpath("data/expected_tables.json").read_text(encoding="utf-8")
    return json.loads(text)


def expected(table_id: str) -> dict:
    try:
        return expected_tables()[table_id]
    except KeyError:
        raise KeyError(f"unknown table id {table_id!r}; known: {', '.join(TABLE_IDS)}") from None


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return divide(a, b)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt" and len(node.args) == 1:
        arg = _eval(node.args[0])
        if not isinstance(arg, Fraction):
            raise ValueError("sqrt of a non-rational value")
        return QuadraticNumber.sqrt(arg)
    raise ValueError(f"unsupported expression element {ast.dump(node)}")


def parse_value(text: str) -> Scalar | str:
    """Exact value of an expression such as ``-1/(5*sqrt(5))``, ``7/10`` or ``inf``."""
    text = text.strip()
    if text == "inf":
        from .varieties.catalog import INFINITY

        return INFINITY
    return _eval(ast.parse(text, mode="eval"))
