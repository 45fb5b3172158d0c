"""Structural relevance between two units via usage-graph matching.

The score adds four components over the matched object pairs: number of
matched objects, field-access overlap, method-invocation overlap (each
normalized by the context object's own access counts), and matched data
dependencies weighted 1.0 when the access point agrees and 0.5 when only
the endpoints do.

Object pairing is the one underspecified step: when both graphs are small
the implementation enumerates every injective type-compatible assignment
and keeps the best-scoring one (ties resolved toward declaration order);
for larger graphs it falls back to a greedy per-object choice and marks the
report as non-exhaustive so the approximation is visible downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StructureUnavailable
from .graph import ApiUsageGraph, DependencyEdge, GraphObject, extract_usage_graph
from .model import ParseStatus, SourceUnit

# Exhaustive pairing is used while the assignment space stays below this.
_MAX_ASSIGNMENTS = 20_000


@dataclass(frozen=True)
class StructuralWeights:
    object_match: float = 1.0      # per matched object
    field_match: float = 1.0       # per summed field-access fraction
    method_match: float = 1.0      # per summed method-invocation fraction
    dependency_match: float = 1.0  # per summed dependency weight

    def __post_init__(self) -> None:
        for name in ("object_match", "field_match", "method_match", "dependency_match"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


@dataclass(frozen=True)
class MatchReport:
    matched_objects: int
    pairings: tuple[tuple[int, int], ...]       # (context index, candidate index)
    field_fractions: tuple[float, ...]          # aligned with pairings
    method_fractions: tuple[float, ...]
    dependency_matches: tuple[tuple[DependencyEdge, float], ...]
    raw: float
    exhaustive: bool = True
    context_labels: tuple[str, ...] = field(default=(), compare=False)
    candidate_labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def field_total(self) -> float:
        return sum(self.field_fractions)

    @property
    def method_total(self) -> float:
        return sum(self.method_fractions)

    @property
    def dependency_total(self) -> float:
        return sum(weight for _edge, weight in self.dependency_matches)

    def to_dict(self) -> dict:
        return {
            "matched_objects": self.matched_objects,
            "pairings": [
                {
                    "context": self.context_labels[c] if self.context_labels else c,
                    "candidate": self.candidate_labels[k] if self.candidate_labels else k,
                    "field_fraction": self.field_fractions[i],
                    "method_fraction": self.method_fractions[i],
                }
                for i, (c, k) in enumerate(self.pairings)
            ],
            "dependency_matches": [
                {
                    "consumer": self.context_labels[e.consumer] if self.context_labels else e.consumer,
                    "producer": self.context_labels[e.producer] if self.context_labels else e.producer,
                    "access_point": e.access_point,
                    "weight": w,
                }
                for e, w in self.dependency_matches
            ],
            "field_total": self.field_total,
            "method_total": self.method_total,
            "dependency_total": self.dependency_total,
            "raw": self.raw,
            "exhaustive": self.exhaustive,
        }


def types_match(a: GraphObject, b: GraphObject) -> bool:
    """Qualified names must agree exactly; a simple name matches either."""
    if "." in a.type_name and "." in b.type_name:
        return a.type_name == b.type_name
    return a.simple_type == b.simple_type


def _overlap(context_counts, candidate_counts) -> tuple[int, int]:
    """(matched, total) of context accesses covered by the candidate."""
    total = sum(context_counts.values())
    matched = sum(
        min(count, candidate_counts.get(name, 0))
        for name, count in context_counts.items()
    )
    return matched, total


def field_access_match(
    pairings: list[tuple[int, int]], context: ApiUsageGraph, candidate: ApiUsageGraph
) -> list[float]:
    """Per-pairing field-overlap fractions; objects without field accesses
    contribute zero instead of dividing by zero."""
    fractions = []
    for ci, ki in pairings:
        matched, total = _overlap(
            context.objects[ci].field_counter(), candidate.objects[ki].field_counter()
        )
        fractions.append(matched / total if total else 0.0)
    return fractions


def method_invocation_match(
    pairings: list[tuple[int, int]], context: ApiUsageGraph, candidate: ApiUsageGraph
) -> list[float]:
    """Per-pairing method-overlap fractions; constructors ride along as the
    ``<init>`` entry the graph already carries."""
    fractions = []
    for ci, ki in pairings:
        matched, total = _overlap(
            context.objects[ci].method_counter(), candidate.objects[ki].method_counter()
        )
        fractions.append(matched / total if total else 0.0)
    return fractions


def data_dependency_match(
    pairings: list[tuple[int, int]], context: ApiUsageGraph, candidate: ApiUsageGraph
) -> list[tuple[DependencyEdge, float]]:
    """Context dependency edges whose paired endpoints are also connected in
    the candidate; 1.0 for an equal access point, 0.5 otherwise. Each
    candidate edge backs at most one context edge, exact matches first."""
    paired = dict(pairings)
    used: set[int] = set()
    matches: dict[DependencyEdge, float] = {}

    def candidate_edges(ctx_edge: DependencyEdge):
        cc = paired.get(ctx_edge.consumer)
        cp = paired.get(ctx_edge.producer)
        if cc is None or cp is None:
            return
        for idx, edge in enumerate(candidate.dependencies):
            if idx not in used and edge.consumer == cc and edge.producer == cp:
                yield idx, edge

    for ctx_edge in context.dependencies:  # exact access-point matches first
        for idx, edge in candidate_edges(ctx_edge):
            if edge.access_point == ctx_edge.access_point:
                used.add(idx)
                matches[ctx_edge] = 1.0
                break
    for ctx_edge in context.dependencies:
        if ctx_edge in matches:
            continue
        for idx, _edge in candidate_edges(ctx_edge):
            used.add(idx)
            matches[ctx_edge] = 0.5
            break

    return [(e, matches[e]) for e in context.dependencies if e in matches]


def _score_pairing(
    pairings: list[tuple[int, int]],
    context: ApiUsageGraph,
    candidate: ApiUsageGraph,
    weights: StructuralWeights,
) -> tuple[float, list[float], list[float], list[tuple[DependencyEdge, float]]]:
    fam = field_access_match(pairings, context, candidate)
    mim = method_invocation_match(pairings, context, candidate)
    deps = data_dependency_match(pairings, context, candidate)
    raw = (
        weights.object_match * len(pairings)
        + weights.field_match * sum(fam)
        + weights.method_match * sum(mim)
        + weights.dependency_match * sum(w for _e, w in deps)
    )
    return raw, fam, mim, deps


def _assignment_space(context: ApiUsageGraph, candidate: ApiUsageGraph) -> int:
    space = 1
    for ctx_obj in context.objects:
        options = sum(1 for c in candidate.objects if types_match(ctx_obj, c))
        space *= options + 1
        if space > _MAX_ASSIGNMENTS:
            break
    return space

def _enumerate_pairings(
    context: ApiUsageGraph, candidate: ApiUsageGraph
) -> list[list[tuple[int, int]]]:
    """Every injective type-compatible assignment, in an order that prefers
    pairing over skipping and earlier-declared candidates over later ones."""
    results: list[list[tuple[int, int]]] = []
    compat = [
        [ki for ki, cand in enumerate(candidate.objects) if types_match(ctx, cand)]
        for ctx in context.objects
    ]

    def recurse(ci: int, used: set[int], acc: list[tuple[int, int]]) -> None:
        if ci == len(context.objects):
            results.append(list(acc))
            return
        for ki in compat[ci]:
            if ki in used:
                continue
            acc.append((ci, ki))
            used.add(ki)
            recurse(ci + 1, used, acc)
            used.remove(ki)
            acc.pop()
        recurse(ci + 1, used, acc)  # leave this context object unpaired

    recurse(0, set(), [])
    return results


def _greedy_pairing(
    context: ApiUsageGraph, candidate: ApiUsageGraph
) -> list[tuple[int, int]]:
    """Declaration-order greedy pick maximizing raw member-overlap counts."""
    used: set[int] = set()
    pairing: list[tuple[int, int]] = []
    for ci, ctx_obj in enumerate(context.objects):
        best: tuple[int, int] | None = None  # (overlap, candidate index)
        for ki, cand_obj in enumerate(candidate.objects):
            if ki in used or not types_match(ctx_obj, cand_obj):
                continue
            fm, _ = _overlap(ctx_obj.field_counter(), cand_obj.field_counter())
            mm, _ = _overlap(ctx_obj.method_counter(), cand_obj.method_counter())
            score = fm + mm
            if best is None or score > best[0]:
                best = (score, ki)
        if best is not None:
            pairing.append((ci, best[1]))
            used.add(best[1])
    return pairing


def match_objects(
    context: ApiUsageGraph,
    candidate: ApiUsageGraph,
    weights: StructuralWeights | None = None,
) -> list[tuple[int, int]]:
    """Best object pairing between the graphs (see module docstring)."""
    weights = weights or StructuralWeights()
    pairing, _exhaustive = _best_pairing(context, candidate, weights)
    return pairing


def _best_pairing(
    context: ApiUsageGraph, candidate: ApiUsageGraph, weights: StructuralWeights
) -> tuple[list[tuple[int, int]], bool]:
    if _assignment_space(context, candidate) <= _MAX_ASSIGNMENTS:
        best: list[tuple[int, int]] | None = None
        best_key: tuple[float, int] | None = None
        for pairing in _enumerate_pairings(context, candidate):
            raw, _f, _m, _d = _score_pairing(pairing, context, candidate, weights)
            key = (raw, len(pairing))
            if best_key is None or key > best_key:
                best, best_key = pairing, key
        return best if best is not None else [], True
    return _greedy_pairing(context, candidate), False


def structural_score(
    context: SourceUnit, candidate: SourceUnit, weights: StructuralWeights | None = None
) -> MatchReport:
    """Full structural relevance between two parsed units."""
    if context.parse_status is ParseStatus.FAILED or candidate.parse_status is ParseStatus.FAILED:
        raise StructureUnavailable("structural scoring needs two parsed units")
    weights = weights or StructuralWeights()
    ctx_graph = extract_usage_graph(context)
    cand_graph = extract_usage_graph(candidate)
    pairing, exhaustive = _best_pairing(ctx_graph, cand_graph, weights)
    raw, fam, mim, deps = _score_pairing(pairing, ctx_graph, cand_graph, weights)
    return MatchReport(
        matched_objects=len(pairing),
        pairings=tuple(pairing),
        field_fractions=tuple(fam),
        method_fractions=tuple(mim),
        dependency_matches=tuple(deps),
        raw=raw,
        exhaustive=exhaustive,
        context_labels=tuple(o.label for o in ctx_graph.objects),
        candidate_labels=tuple(o.label for o in cand_graph.objects),
    )
