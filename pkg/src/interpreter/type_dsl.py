"""
Type DSL
Rule-based parsing of the type literals
real[a=..], pzero[a=..,k=..], pinf[k=..], res[a=..,n=..(,tau=..)], pj[k=..]
"""

import re
from typing import Dict, List, Optional, Tuple, Union

from abflows.borel import BorelTypeJ
from config.engine import EngineConfig
from errors import ParseError, PreconditionError
from interpreter.expression_parser import ExpressionParser
from onetypes.types import Infinitesimal, OneType, Realized, Residual, Unbounded

ParsedType = Union[OneType, BorelTypeJ]

TYPE_PATTERN = re.compile(r"^\s*(?P<kind>[a-z]+)\s*\[(?P<body>[^\[\]]*)\]\s*$")
ARGUMENT_PATTERN = re.compile(r"^\s*(?P<key>[a-z]+)\s*=(?P<value>.*)$")
INTEGER_PATTERN = re.compile(r"^\s*[-+]?\d+\s*$")


class TypeParser:
    """Parses type literals into OneType values or Borel ideal elements"""

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.expressions = ExpressionParser(self.config)
        self.type_arguments = self._load_type_arguments()

    def _load_type_arguments(self) -> Dict[str, Tuple[List[str], Dict[str, str]]]:
        """Required arguments and optional defaults per kind"""
        return {
            "real": (["a"], {}),
            "pzero": (["k"], {"a": "0"}),
            "pinf": (["k"], {}),
            "res": (["a", "n"], {"tau": "1"}),
            "pj": (["k"], {}),
        }

    def parse(self, text: str) -> ParsedType:
        match = TYPE_PATTERN.match(text)
        if not match:
            raise ParseError(f"not a type literal: {text!r}", 0)
        kind = match.group("kind")
        if kind not in self.type_arguments:
            raise ParseError(f"unknown type kind {kind!r}", match.start("kind"))
        arguments = self._arguments(kind, match.group("body"), match.start("body"))
        try:
            return self._build(kind, arguments)
        except PreconditionError as e:
            raise ParseError(str(e), match.start("body"))

    def _arguments(self, kind: str, body: str, offset: int) -> Dict[str, Tuple[str, int]]:
        required, optional = self.type_arguments[kind]
        arguments: Dict[str, Tuple[str, int]] = {}
        position = offset
        for part in body.split(",") if body.strip() else []:
            match = ARGUMENT_PATTERN.match(part)
            if not match:
                raise ParseError(f"expected key=value, found {part.strip()!r}", position)
            key = match.group("key")
            if key not in required and key not in optional:
                raise ParseError(f"{kind} takes no argument {key!r}", position + match.start("key"))
            if key in arguments:
                raise ParseError(f"argument {key!r} given twice", position + match.start("key"))
            arguments[key] = (match.group("value"), position + match.start("value"))
            position += len(part) + 1
        for key in required:
            if key not in arguments:
                raise ParseError(f"{kind} needs argument {key!r}", offset + len(body))
        for key, default in optional.items():
            arguments.setdefault(key, (default, offset))
        return arguments

    def _integer(self, arguments, key: str) -> int:
        value, position = arguments[key]
        if not INTEGER_PATTERN.match(value):
            raise ParseError(f"{key} must be an integer, found {value.strip()!r}", position)
        return int(value)

    def _series(self, arguments, key: str):
        value, position = arguments[key]
        return self.expressions.parse_series(value, position)

    def _build(self, kind: str, arguments) -> ParsedType:
        if kind == "real":
            return Realized(self._series(arguments, "a"))
        if kind == "pzero":
            return Infinitesimal(self._series(arguments, "a"), self._integer(arguments, "k"))
        if kind == "pinf":
            return Unbounded(self._integer(arguments, "k"))
        if kind == "res":
            return Residual(self._series(arguments, "a"), self._integer(arguments, "n"),
                            self._integer(arguments, "tau"))
        return BorelTypeJ(self._integer(arguments, "k"))


def parse_type(text: str, config: Optional[EngineConfig] = None) -> ParsedType:
    return TypeParser(config).parse(text)
