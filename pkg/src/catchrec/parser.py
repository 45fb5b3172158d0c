"""Fragment parser: tokens in, :class:`SourceUnit` out.

Works directly on the token stream with brace/paren matching, so incomplete
or non-compilable fragments degrade instead of erroring: a fragment that
cannot be segmented at all is marked ``Failed`` (tokens stay available for
the lexical path), recoverable anomalies are marked ``Partial``.

Type resolution is purely syntactic. An object's type comes from its
declaration, a ``new T(...)`` expression, or a cast; calls on receivers that
cannot be resolved to a tracked object are kept as tokens but ignored for
object accounting. Static member access ``T.m`` on a type that is known to
the unit attaches to the earliest tracked object of that type, or creates a
pseudo-object with an empty variable name when no instance exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexer import Token, TokenKind, scan
from .model import (
    ApiObjectUse,
    CatchClause,
    Dependency,
    HandlerInfo,
    ParseStatus,
    SourceUnit,
    StatementInfo,
)

# Types never tracked as API objects: primitives, their boxes, and plain
# value types. Everything else (collections, IO, user classes) is tracked.
UNTRACKED_TYPES = frozenset(
    {
        "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
        "Boolean", "Byte", "Character", "Short", "Integer", "Long", "Float", "Double",
        "String", "CharSequence", "Object", "Void", "Number",
        "var",  # contextual keyword; the declared type is unrecoverable
    }
)

# Exception types considered generic catch-alls rather than specific choices.
GENERIC_EXCEPTIONS = frozenset(
    {"Exception", "Throwable", "java.lang.Exception", "java.lang.Throwable"}
)

_DECL_FOLLOW = frozenset({"=", ";", ":", ",", ")"})
_STMT_CONTINUATIONS = frozenset({"catch", "finally", "else", "while"})


def parse(raw_text: str) -> SourceUnit:
    """Parse ``raw_text`` into a :class:`SourceUnit`; never raises."""
    result = scan(raw_text)
    tokens = result.tokens
    diagnostics: list[str] = []
    if result.skipped:
        diagnostics.append(f"skipped {result.skipped} unlexable characters")

    status = _bracket_status(tokens, diagnostics)
    line_count = len(raw_text.splitlines())
    sloc = len(result.code_lines)

    if status is ParseStatus.FAILED:
        return SourceUnit(
            raw_text=raw_text,
            tokens=tokens,
            sloc=sloc,
            handlers=HandlerInfo(),
            objects=(),
            parse_status=ParseStatus.FAILED,
            dependencies=(),
            line_count=line_count,
            code_lines=result.code_lines,
            comment_lines=result.comment_lines,
            diagnostics=tuple(diagnostics),
        )

    handlers, catch_header_spans, orphan = _extract_handlers(tokens, result.code_lines)
    if orphan:
        status = ParseStatus.PARTIAL
        diagnostics.append("catch clause without a preceding try block")

    excluded: set[int] = set()
    for start, end in catch_header_spans:
        excluded.update(range(start, end + 1))

    extractor = _ObjectExtractor(tokens, excluded)
    extractor.run()

    return SourceUnit(
        raw_text=raw_text,
        tokens=tokens,
        sloc=sloc,
        handlers=handlers,
        objects=tuple(extractor.uses),
        parse_status=status,
        dependencies=tuple(
            Dependency(c, p, a) for c, p, a in sorted(extractor.deps)
        ),
        line_count=line_count,
        code_lines=result.code_lines,
        comment_lines=result.comment_lines,
        diagnostics=tuple(diagnostics),
    )


def extract_handlers(unit: SourceUnit) -> HandlerInfo:
    """Handler structure of an already-parsed unit."""
    return unit.handlers


def _bracket_status(tokens: tuple[Token, ...], diagnostics: list[str]) -> ParseStatus:
    brace = paren = 0
    for tok in tokens:
        if tok.kind is not TokenKind.PUNCTUATION:
            continue
        if tok.text == "{":
            brace += 1
        elif tok.text == "}":
            brace -= 1
        elif tok.text == "(":
            paren += 1
        elif tok.text == ")":
            paren -= 1
        if brace < 0 or paren < 0:
            diagnostics.append("closing bracket without matching opener")
            return ParseStatus.FAILED

    status = ParseStatus.FULL
    if brace > 0 or paren > 0:
        diagnostics.append("unclosed block recovered at end of input")
        status = ParseStatus.PARTIAL
    if tokens and tokens[-1].text not in {";", "{", "}"}:
        diagnostics.append("fragment ends mid-statement")
        status = ParseStatus.PARTIAL
    return status


# ---------------------------------------------------------------------------
# try / catch / finally structure
# ---------------------------------------------------------------------------


def _match_brace(tokens: tuple[Token, ...], open_idx: int) -> int:
    """Index of the ``}`` matching ``tokens[open_idx]``; last index if unclosed."""
    depth = 0
    for i in range(open_idx, len(tokens)):
        text = tokens[i].text
        if text == "{":
            depth += 1
        elif text == "}":
            depth -= 1
            if depth == 0:
                return i
    return len(tokens) - 1


def _find_close_paren(tokens: tuple[Token, ...], open_idx: int) -> int:
    depth = 0
    for i in range(open_idx, len(tokens)):
        text = tokens[i].text
        if text == "(":
            depth += 1
        elif text == ")":
            depth -= 1
            if depth == 0:
                return i
    return len(tokens) - 1


def _extract_handlers(
    tokens: tuple[Token, ...], code_lines: frozenset[int]
) -> tuple[HandlerInfo, list[tuple[int, int]], bool]:
    try_blocks = 0
    finally_blocks = 0
    catches: list[CatchClause] = []
    header_spans: list[tuple[int, int]] = []
    handler_lines: set[int] = set()
    claimed_catches: set[int] = set()
    orphan = False
    n = len(tokens)

    # Every try is processed where it appears; nested tries inside bodies are
    # found by the same linear scan. Each catch is claimed by the try whose
    # block it directly follows.
    for i, tok in enumerate(tokens):
        if tok.kind is not TokenKind.KEYWORD or tok.text != "try":
            continue
        try_blocks += 1
        j = i + 1
        if j < n and tokens[j].text == "(":  # try-with-resources header
            j = _find_close_paren(tokens, j) + 1
        if j < n and tokens[j].text == "{":
            j = _match_brace(tokens, j) + 1
        while j < n and tokens[j].kind is TokenKind.KEYWORD:
            if tokens[j].text == "catch":
                claimed_catches.add(j)
                j = _parse_catch(tokens, j, catches, header_spans, handler_lines)
            elif tokens[j].text == "finally":
                finally_blocks += 1
                j = _parse_finally(tokens, j, handler_lines)
            else:
                break

    for i, tok in enumerate(tokens):
        if (
            tok.kind is TokenKind.KEYWORD
            and tok.text == "catch"
            and i not in claimed_catches
        ):
            orphan = True
            _parse_catch(tokens, i, catches, header_spans, handler_lines)

    info = HandlerInfo(
        try_blocks=try_blocks,
        catch_clauses=tuple(catches),
        finally_blocks=finally_blocks,
        handler_sloc=len(handler_lines & code_lines),
    )
    return info, header_spans, orphan


def _parse_catch(
    tokens: tuple[Token, ...],
    catch_idx: int,
    catches: list[CatchClause],
    header_spans: list[tuple[int, int]],
    handler_lines: set[int],
) -> int:
    n = len(tokens)
    header_line = tokens[catch_idx].line
    j = catch_idx + 1
    types: tuple[str, ...] = ()
    if j < n and tokens[j].text == "(":
        close = _find_close_paren(tokens, j)
        types = _catch_types(tokens[j + 1 : close])
        header_spans.append((catch_idx, close))
        j = close + 1
    statements: tuple[StatementInfo, ...] = ()
    end_line = header_line
    if j < n and tokens[j].text == "{":
        close = _match_brace(tokens, j)
        statements = _split_statements(tokens[j + 1 : close])
        end_line = tokens[close].line
        j = close + 1
    handler_lines.update(range(header_line, end_line + 1))
    catches.append(CatchClause(exception_types=types, statements=statements))
    return j


def _parse_finally(
    tokens: tuple[Token, ...],
    finally_idx: int,
    handler_lines: set[int],
) -> int:
    n = len(tokens)
    header_line = tokens[finally_idx].line
    j = finally_idx + 1
    end_line = header_line
    if j < n and tokens[j].text == "{":
        close = _match_brace(tokens, j)
        end_line = tokens[close].line
        j = close + 1
    handler_lines.update(range(header_line, end_line + 1))
    return j


def _catch_types(header: tuple[Token, ...]) -> tuple[str, ...]:
    """Exception type names from a catch header; the parameter name and any
    ``final`` or annotation is dropped, multi-catch segments all kept."""
    segments: list[list[str]] = [[]]
    chain: list[str] = []
    pending_dot = False
    skip_annotation = False

    def close_chain() -> None:
        nonlocal chain
        if chain:
            segments[-1].append(".".join(chain))
            chain = []

    for tok in header:
        if tok.text == "|":
            close_chain()
            segments.append([])
            pending_dot = False
        elif tok.text == "@":
            close_chain()
            skip_annotation = True
        elif tok.kind is TokenKind.IDENTIFIER:
            if skip_annotation:
                skip_annotation = False
                continue
            if chain and not pending_dot:
                close_chain()
            chain.append(tok.text)
            pending_dot = False
        elif tok.text == ".":
            pending_dot = True
        else:
            close_chain()
            pending_dot = False
    close_chain()

    return tuple(seg[0] for seg in segments if seg)


def _split_statements(body: tuple[Token, ...]) -> tuple[StatementInfo, ...]:
    """Top-level statements of a block; multi-line calls stay single
    statements, a control structure with its block counts as one."""
    statements: list[StatementInfo] = []
    current: list[Token] = []
    brace = paren = 0
    n = len(body)
    for idx, tok in enumerate(body):
        text = tok.text
        current.append(tok)
        if text == "{":
            brace += 1
        elif text == "}":
            brace -= 1
            if brace == 0 and paren == 0:
                nxt = body[idx + 1].text if idx + 1 < n else ""
                if nxt not in _STMT_CONTINUATIONS:
                    _flush(statements, current)
                    current = []
        elif text == "(":
            paren += 1
        elif text == ")":
            paren = max(0, paren - 1)
        elif text == ";" and brace == 0 and paren == 0:
            _flush(statements, current)
            current = []
    _flush(statements, current)
    return tuple(statements)


def _flush(statements: list[StatementInfo], toks: list[Token]) -> None:
    meaningful = [t for t in toks if t.text != ";"]
    if not meaningful:
        return
    statements.append(
        StatementInfo(
            text=" ".join(t.text for t in toks).strip(),
            significant=_is_significant(meaningful),
        )
    )


def _is_significant(toks: list[Token]) -> bool:
    """Stack-trace prints and console writes are noise; everything else is a
    real handler action (logging frameworks and UI notifications included)."""
    chain: list[str] = []
    i = 0
    n = len(toks)
    while i < n and toks[i].kind is TokenKind.IDENTIFIER:
        chain.append(toks[i].text)
        if i + 1 < n and toks[i + 1].text == ".":
            i += 2
        else:
            i += 1
            break
    if not chain or i >= n or toks[i].text != "(":
        return True  # not a plain call statement
    if chain[-1] == "printStackTrace":
        return False
    if len(chain) >= 2 and chain[0] == "System" and chain[1] in {"out", "err"}:
        return False
    return True


# ---------------------------------------------------------------------------
# API object and data-dependency extraction
# ---------------------------------------------------------------------------


@dataclass
class _Chain:
    parts: list[str]
    end: int  # index just past the chain


class _ObjectExtractor:
    """Single forward walk collecting object uses and data dependencies.

    A stack of "consumers" mirrors open call parentheses: a tracked object
    referenced inside a call's arguments yields a dependency edge from the
    innermost enclosing consumer. Grouping parentheses inherit the current
    consumer; calls on untracked receivers push ``None`` and so absorb the
    references inside their own arguments.
    """

    def __init__(self, tokens: tuple[Token, ...], excluded: set[int]):
        self.tokens = tokens
        self.excluded = excluded
        self.uses: list[ApiObjectUse] = []
        self.bindings: dict[str, int] = {}
        self.known_types: dict[str, str] = {}
        self.imports: dict[str, str] = {}
        self.deps: set[tuple[int, int, str]] = set()
        self.paren_stack: list[int | None] = []

    # -- helpers ----------------------------------------------------------

    def _chain(self, i: int) -> _Chain:
        toks = self.tokens
        parts = [toks[i].text]
        j = i + 1
        while (
            j + 1 < len(toks)
            and toks[j].text == "."
            and toks[j + 1].kind is TokenKind.IDENTIFIER
        ):
            parts.append(toks[j + 1].text)
            j += 2
        return _Chain(parts, j)

    def _skip_generics(self, j: int) -> int | None:
        toks = self.tokens
        if j >= len(toks) or toks[j].text != "<":
            return None
        depth = 0
        steps = 0
        while j < len(toks) and steps < 64:
            text = toks[j].text
            if text == "<":
                depth += 1
            elif text == ">":
                depth -= 1
            elif text == ">>":
                depth -= 2
            elif text == ">>>":
                depth -= 3
            elif text in {",", ".", "?", "[", "]"}:
                pass
            elif toks[j].kind is TokenKind.IDENTIFIER:
                pass
            elif toks[j].kind is TokenKind.KEYWORD and text in {
                "extends", "super", "int", "long", "double", "float",
                "boolean", "byte", "short", "char",
            }:
                pass
            else:
                return None
            j += 1
            steps += 1
            if depth <= 0:
                return j if depth == 0 else None
        return None

    def _resolve(self, type_text: str) -> str:
        if "." in type_text:
            return type_text
        return self.imports.get(type_text, type_text)

    def _register_type(self, type_text: str) -> str:
        canonical = self._resolve(type_text)
        self.known_types[type_text] = canonical
        self.known_types[canonical] = canonical
        self.known_types[canonical.rsplit(".", 1)[-1]] = canonical
        return canonical

    @staticmethod
    def _trackable(canonical: str) -> bool:
        return canonical.rsplit(".", 1)[-1] not in UNTRACKED_TYPES

    def _use_for_var(self, var: str, canonical: str, at: int) -> int:
        idx = self.bindings.get(var)
        if idx is not None and self.uses[idx].type_name == canonical:
            return idx
        self.uses.append(ApiObjectUse(var, canonical, first_index=at))
        self.bindings[var] = len(self.uses) - 1
        return len(self.uses) - 1

    def _use_for_type(self, canonical: str, at: int) -> int:
        """Static access: earliest object of the type, else a pseudo-object."""
        for idx, use in enumerate(self.uses):
            if use.type_name == canonical:
                return idx
        self.uses.append(ApiObjectUse("", canonical, first_index=at))
        return len(self.uses) - 1

    def _enclosing(self) -> int | None:
        return self.paren_stack[-1] if self.paren_stack else None

    def _add_dep(self, consumer: int | None, producer: int, access_point: str) -> None:
        if consumer is None or consumer == producer:
            return
        self.deps.add((consumer, producer, access_point))

    # -- main walk ---------------------------------------------------------

    def run(self) -> None:
        toks = self.tokens
        n = len(toks)
        i = 0
        while i < n:
            if i in self.excluded:
                i += 1
                continue
            tok = toks[i]
            if tok.kind is TokenKind.PUNCTUATION:
                if tok.text == "(":
                    self.paren_stack.append(self._enclosing())
                elif tok.text == ")":
                    if self.paren_stack:
                        self.paren_stack.pop()
                i += 1
                continue
            if tok.kind is TokenKind.KEYWORD:
                if tok.text == "new":
                    i = self._handle_new(i)
                elif tok.text == "import":
                    i = self._handle_import(i)
                else:
                    i += 1
                continue
            if tok.kind is TokenKind.IDENTIFIER:
                i = self._handle_identifier(i)
                continue
            i += 1

    def _handle_import(self, i: int) -> int:
        toks = self.tokens
        j = i + 1
        if j < len(toks) and toks[j].kind is TokenKind.KEYWORD and toks[j].text == "static":
            while j < len(toks) and toks[j].text != ";":
                j += 1
            return j + 1
        parts: list[str] = []
        wildcard = False
        while j < len(toks) and toks[j].text != ";":
            if toks[j].kind is TokenKind.IDENTIFIER:
                parts.append(toks[j].text)
            elif toks[j].text == "*":
                wildcard = True
            j += 1
        if parts and not wildcard:
            self.imports[parts[-1]] = ".".join(parts)
        return j + 1

    def _handle_new(self, i: int) -> int:
        toks = self.tokens
        j = i + 1
        if j >= len(toks) or toks[j].kind is not TokenKind.IDENTIFIER:
            return i + 1
        chain = self._chain(j)
        j = chain.end
        gen = self._skip_generics(j)
        if gen is not None:
            j = gen
        if j < len(toks) and toks[j].text == "[":
            self._register_type(".".join(chain.parts))
            return j  # array creation: no object use
        if j >= len(toks) or toks[j].text != "(":
            return chain.end
        canonical = self._register_type(".".join(chain.parts))
        consumer: int | None = None
        if self._trackable(canonical):
            var = self._assigned_var(i)
            if var is not None and var in self.bindings:
                idx = self.bindings[var]
                self.uses[idx].constructor_called = True
                consumer = idx
            elif var is not None:
                idx = self._use_for_var(var, canonical, i)
                self.uses[idx].constructor_called = True
                consumer = idx
            else:
                self.uses.append(
                    ApiObjectUse("", canonical, constructor_called=True, first_index=i)
                )
                idx = len(self.uses) - 1
                self._add_dep(self._enclosing(), idx, "")
                consumer = idx
        self.paren_stack.append(consumer)
        return j + 1

    def _assigned_var(self, new_idx: int) -> str | None:
        toks = self.tokens
        if (
            new_idx >= 2
            and toks[new_idx - 1].text == "="
            and toks[new_idx - 2].kind is TokenKind.IDENTIFIER
        ):
            return toks[new_idx - 2].text
        return None

    def _handle_identifier(self, i: int) -> int:
        toks = self.tokens
        n = len(toks)
        chain = self._chain(i)
        j = chain.end

        decl_end = self._declaration(chain, j, i)
        if decl_end is not None:
            return decl_end

        cast_end = self._cast_binding(chain, j, i)
        if cast_end is not None:
            return cast_end

        head = chain.parts[0]
        is_call = j < n and toks[j].text == "("

        if is_call:
            consumer: int | None = None
            if len(chain.parts) == 2:
                member = chain.parts[1]
                target = self._receiver_use(head, i)
                if target is not None:
                    self.uses[target].methods_invoked[member] += 1
                    self._add_dep(self._enclosing(), target, member)
                    consumer = target
            elif len(chain.parts) > 2:
                target = self._receiver_use(head, i)
                if target is not None:
                    self.uses[target].fields_accessed[chain.parts[1]] += 1
            self.paren_stack.append(consumer)
            return j + 1

        if len(chain.parts) == 1:
            if head in self.bindings:
                self._add_dep(self._enclosing(), self.bindings[head], "")
            return j

        target = self._receiver_use(head, i)
        if target is not None:
            member = chain.parts[1]
            self.uses[target].fields_accessed[member] += 1
            if len(chain.parts) == 2:
                self._add_dep(self._enclosing(), target, member)
        return j

    def _receiver_use(self, head: str, at: int) -> int | None:
        if head in self.bindings:
            return self.bindings[head]
        if head in self.known_types:
            canonical = self.known_types[head]
            if self._trackable(canonical):
                return self._use_for_type(canonical, at)
        return None

    def _declaration(self, chain: _Chain, j: int, start: int) -> int | None:
        """``Type var`` followed by ``= ; : , )`` binds ``var``."""
        toks = self.tokens
        n = len(toks)
        jj = j
        gen = self._skip_generics(jj)
        if gen is not None:
            jj = gen
        while jj + 1 < n and toks[jj].text == "[" and toks[jj + 1].text == "]":
            jj += 2
        if jj >= n or toks[jj].kind is not TokenKind.IDENTIFIER:
            return None
        follow = toks[jj + 1].text if jj + 1 < n else ";"
        if follow not in _DECL_FOLLOW:
            return None
        canonical = self._register_type(".".join(chain.parts))
        if self._trackable(canonical):
            self._use_for_var(toks[jj].text, canonical, start)
        return jj + 1

    def _cast_binding(self, chain: _Chain, j: int, start: int) -> int | None:
        """``x = (T) value`` binds ``x`` when it has no declaration here."""
        toks = self.tokens
        n = len(toks)
        if len(chain.parts) != 1 or j >= n or toks[j].text != "=":
            return None
        if j + 1 >= n or toks[j + 1].text != "(":
            return None
        k = j + 2
        if k >= n or toks[k].kind is not TokenKind.IDENTIFIER:
            return None
        type_chain = self._chain(k)
        k = type_chain.end
        if k >= n or toks[k].text != ")":
            return None
        after = toks[k + 1] if k + 1 < n else None
        type_text = ".".join(type_chain.parts)
        looks_like_type = type_text in self.known_types or (
            type_text[0].isupper()
            and after is not None
            and (after.kind is TokenKind.IDENTIFIER or after.text == "new")
        )
        if not looks_like_type:
            return None
        canonical = self._register_type(type_text)
        var = chain.parts[0]
        if var not in self.bindings and self._trackable(canonical):
            self._use_for_var(var, canonical, start)
        return k + 1
