"""Parsed representation of a source fragment.

A :class:`SourceUnit` is what the rest of the pipeline consumes: the token
stream, line counts, try/catch structure, and the API objects the fragment
uses. Units are built by :func:`catchrec.parser.parse` and never mutated
afterwards, so they are safe to share across threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .lexer import Token


class ParseStatus(Enum):
    FULL = "Full"
    PARTIAL = "Partial"
    FAILED = "Failed"


@dataclass(frozen=True)
class StatementInfo:
    text: str
    significant: bool


@dataclass(frozen=True)
class CatchClause:
    exception_types: tuple[str, ...]
    statements: tuple[StatementInfo, ...]

    @property
    def significant_count(self) -> int:
        return sum(1 for s in self.statements if s.significant)


@dataclass(frozen=True)
class HandlerInfo:
    try_blocks: int = 0
    catch_clauses: tuple[CatchClause, ...] = ()
    finally_blocks: int = 0
    handler_sloc: int = 0


@dataclass
class ApiObjectUse:
    """One tracked API object: a variable, a static pseudo-object (empty
    variable name), or an anonymous constructor argument."""

    variable_name: str
    type_name: str
    fields_accessed: Counter = field(default_factory=Counter)
    methods_invoked: Counter = field(default_factory=Counter)
    constructor_called: bool = False
    first_index: int = 0  # token index of first appearance, for tie-breaks

    @property
    def simple_type(self) -> str:
        return self.type_name.rsplit(".", 1)[-1]

    def activity(self) -> int:
        """Member-access volume used to pick the dominant API class."""
        total = sum(self.methods_invoked.values()) + sum(self.fields_accessed.values())
        return total + (1 if self.constructor_called else 0)


@dataclass(frozen=True)
class Dependency:
    """Data flow between tracked objects: ``consumer`` received ``producer``
    (or a member accessed on it, named by ``access_point``) as an argument."""

    consumer: int  # index into SourceUnit.objects
    producer: int
    access_point: str = ""


@dataclass
class SourceUnit:
    raw_text: str
    tokens: tuple[Token, ...]
    sloc: int
    handlers: HandlerInfo
    objects: tuple[ApiObjectUse, ...]
    parse_status: ParseStatus
    dependencies: tuple[Dependency, ...] = ()
    line_count: int = 0
    code_lines: frozenset[int] = frozenset()
    comment_lines: frozenset[int] = frozenset()
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.parse_status is ParseStatus.FAILED and (self.objects or self.handlers.catch_clauses):
            raise ValueError("failed parse must not carry objects or handlers")
