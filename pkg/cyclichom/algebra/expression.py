"""Recursive-descent parser for construction expressions.

Grammar::

    expr := "ground_field" | "k" | "dual_numbers"
          | "truncated_poly" "(" INT ")"
          | "matrix" "(" expr "," INT ")"
          | "product" "(" expr "," expr ")"
          | "upper_triangular" "(" expr ")"
          | "literal" "(" STRING ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from cyclichom.algebra.constructions import (
    DualNumbersSpec,
    GroundFieldSpec,
    LiteralSpec,
    MatrixSpec,
    ProductSpec,
    TruncatedPolySpec,
    UpperTriangularSpec,
    _Spec,
)
from cyclichom.algebra.documents import load_algebra_document
from cyclichom.core.errors import InputFormatError

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<int>-?\d+)
      | "(?P<dq>[^"]*)"
      | '(?P<sq>[^']*)'
      | (?P<punct>[(),])
    )""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return tokens
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InputFormatError(f"unexpected character {text[pos]!r} at column {pos + 1}")
        kind = match.lastgroup or ""
        value = match.group(kind)
        tokens.append(Token("string" if kind in ("dq", "sq") else kind, value, pos + 1))
        pos = match.end()


class _Parser:
    def __init__(self, text: str, base_dir: Optional[Path]) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.base_dir = base_dir

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _error(self, message: str) -> InputFormatError:
        tok = self._peek()
        column = tok.column if tok else len(self.text) + 1
        return InputFormatError(f"{message} at column {column} in {self.text!r}")

    def _expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self._peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            wanted = repr(text) if text else kind
            raise self._error(f"expected {wanted}")
        self.pos += 1
        return tok

    def _int(self) -> int:
        return int(self._expect("int").text)

    def parse(self) -> _Spec:
        spec = self.expr()
        if self._peek() is not None:
            raise self._error("trailing input")
        return spec

    def expr(self) -> _Spec:
        name = self._expect("ident").text
        if name in ("ground_field", "k"):
            return GroundFieldSpec()
        if name == "dual_numbers":
            return DualNumbersSpec()
        if name not in ("truncated_poly", "matrix", "product", "upper_triangular", "literal"):
            self.pos -= 1
            raise self._error(f"unknown construction {name!r}")
        self._expect("punct", "(")
        spec: _Spec
        if name == "truncated_poly":
            spec = TruncatedPolySpec(m=self._int())
        elif name == "matrix":
            inner = self.expr()
            self._expect("punct", ",")
            spec = MatrixSpec(inner=inner, r=self._int())
        elif name == "product":
            left = self.expr()
            self._expect("punct", ",")
            spec = ProductSpec(left=left, right=self.expr())
        elif name == "upper_triangular":
            spec = UpperTriangularSpec(inner=self.expr())
        else:
            source = self._expect("string").text
            path = Path(source)
            if self.base_dir is not None and not path.is_absolute():
                path = self.base_dir / path
            spec = LiteralSpec(document=load_algebra_document(path), source=source)
        self._expect("punct", ")")
        return spec


def parse_expression(text: str, base_dir: Optional[Path] = None) -> _Spec:
    """Parse a construction expression; errors name the offending column."""
    if not text.strip():
        raise InputFormatError("empty construction expression")
    return _Parser(text, base_dir).parse()
