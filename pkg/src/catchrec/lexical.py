"""Token-level relevance: cosine content similarity plus a clone measure.

Both measures run on the significant tokens only (identifiers, keywords,
literals; punctuation and operators carry no naming signal and are dropped).
They look at different granularities on purpose:

* The cosine measure is bag-of-words content similarity, so identifiers are
  broken into lowercase subtokens first (``web_service_url`` and
  ``WEB_SERVICE_URL`` then share mass), the usual vectorization for code
  retrieval, and the one that reproduces the expected similarity levels on
  the reference fixtures.
* The clone measure compares the literal token sequences: the length of the
  longest common subsequence normalized by the context's token count. No
  splitting, case-sensitive: clones are about verbatim reuse. Note the
  asymmetry: only the context length normalizes the ratio.
"""

from __future__ import annotations

import logging
import math
import re
from collections import Counter
from dataclasses import dataclass

from .lexer import Token, TokenKind
from .model import SourceUnit

logger = logging.getLogger(__name__)

SIGNIFICANT_KINDS = frozenset(
    {TokenKind.IDENTIFIER, TokenKind.KEYWORD, TokenKind.LITERAL}
)

# Candidate streams longer than this are truncated for the LCS table.
MAX_CLONE_TOKENS = 20_000

_CAMEL = re.compile(r"[A-Z]+(?![a-z])|[A-Z][a-z0-9]*|[a-z0-9]+")


@dataclass(frozen=True)
class LexicalWeights:
    cosine: float = 1.0
    clone: float = 1.0

    def __post_init__(self) -> None:
        if self.cosine < 0 or self.clone < 0:
            raise ValueError("lexical weights must be non-negative")


@dataclass(frozen=True)
class LexicalReport:
    cosine: float
    clone_ratio: float
    lcs_length: int
    context_token_count: int
    raw: float

    def to_dict(self) -> dict:
        return {
            "cosine": self.cosine,
            "clone_ratio": self.clone_ratio,
            "lcs_length": self.lcs_length,
            "context_token_count": self.context_token_count,
            "raw": self.raw,
        }


def significant_tokens(unit: SourceUnit) -> list[Token]:
    """Identifiers, keywords, and literals of the unit, in order."""
    return [t for t in unit.tokens if t.kind in SIGNIFICANT_KINDS]


def subtokens(token: Token) -> list[str]:
    """Lowercase subtokens for the cosine vector; identifiers split at
    underscores and camel-case boundaries, other tokens pass through."""
    if token.kind is not TokenKind.IDENTIFIER:
        return [token.text]
    parts: list[str] = []
    for chunk in re.split(r"[_$]+", token.text):
        parts.extend(m.group(0).lower() for m in _CAMEL.finditer(chunk))
    return parts or [token.text.lower()]


def cosine_similarity(
    context_tokens: list[Token], candidate_tokens: list[Token]
) -> float:
    """Cosine of the subtoken frequency vectors; 0 when either is empty."""
    u = Counter(s for t in context_tokens for s in subtokens(t))
    v = Counter(s for t in candidate_tokens for s in subtokens(t))
    if not u or not v:
        return 0.0
    dot = sum(count * v[name] for name, count in u.items() if name in v)
    norm_u = math.sqrt(sum(c * c for c in u.values()))
    norm_v = math.sqrt(sum(c * c for c in v.values()))
    return dot / (norm_u * norm_v)


def lcs_length(a: list[str], b: list[str]) -> int:
    """Longest common subsequence length, O(len(a)*len(b)) time and two rows
    of space."""
    if not a or not b:
        return 0
    if len(b) < len(a):
        a, b = b, a
    prev = [0] * (len(a) + 1)
    for y in b:
        cur = [0]
        for i, x in enumerate(a, 1):
            if x == y:
                cur.append(prev[i - 1] + 1)
            else:
                cur.append(max(prev[i], cur[i - 1]))
        prev = cur
    return prev[-1]


def clone_measure(
    context_tokens: list[Token], candidate_tokens: list[Token]
) -> tuple[int, float]:
    """(LCS length, LCS length / context token count); exact token text."""
    context_texts = [t.text for t in context_tokens]
    candidate_texts = [t.text for t in candidate_tokens]
    if len(candidate_texts) > MAX_CLONE_TOKENS:
        logger.warning(
            "clone measure truncating candidate from %d to %d tokens",
            len(candidate_texts),
            MAX_CLONE_TOKENS,
        )
        candidate_texts = candidate_texts[:MAX_CLONE_TOKENS]
    length = lcs_length(context_texts, candidate_texts)
    ratio = length / len(context_texts) if context_texts else 0.0
    return length, ratio


def lexical_score(
    context: SourceUnit, candidate: SourceUnit, weights: LexicalWeights | None = None
) -> LexicalReport:
    """Weighted fusion of the two measures; works on any unit, parsed or not,
    because tokens always exist."""
    weights = weights or LexicalWeights()
    ctx = significant_tokens(context)
    cand = significant_tokens(candidate)
    cos = cosine_similarity(ctx, cand)
    length, ratio = clone_measure(ctx, cand)
    return LexicalReport(
        cosine=cos,
        clone_ratio=ratio,
        lcs_length=length,
        context_token_count=len(ctx),
        raw=weights.cosine * cos + weights.clone * ratio,
    )
