"""Candidate-example corpus: local directory ingestion and an optional
remote code-search client with an on-disk cache.

Local ingestion is the reproducible path used by all tests. The remote
client talks to the GitHub code-search API, bounded-retries on rate limits,
and caches every result set keyed by (query, orgs, limit) so a warm cache
replays byte-identically with zero network traffic. The transport is
injectable for tests.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import time
import urllib.error
import urllib.parse
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .errors import AuthMissing, NetworkFailure, RateLimited
from .model import SourceUnit
from .parser import parse
from .query import SearchQuery

logger = logging.getLogger(__name__)

SEARCH_ENDPOINT = "https://api.github.com/search/code"
TOKEN_ENV_VAR = "GITHUB_TOKEN"
_MAX_ATTEMPTS = 4
_BACKOFF_BASE = 1.0

# transport(url, headers) -> (status code, body bytes)
Transport = Callable[[str, dict[str, str]], tuple[int, bytes]]


@dataclass(frozen=True)
class LocalOrigin:
    path: str  # relative to the ingested directory

    def key(self) -> str:
        return f"local:{self.path}"


@dataclass(frozen=True)
class RemoteOrigin:
    repo: str
    path: str
    url: str

    def key(self) -> str:
        return f"remote:{self.repo}:{self.path}"


def candidate_id(origin: LocalOrigin | RemoteOrigin) -> str:
    return hashlib.sha256(origin.key().encode("utf-8")).hexdigest()[:16]


@dataclass
class Candidate:
    id: str
    origin: LocalOrigin | RemoteOrigin
    source_text: str
    _unit: SourceUnit | None = field(default=None, repr=False)

    @classmethod
    def from_origin(cls, origin: LocalOrigin | RemoteOrigin, source_text: str) -> "Candidate":
        return cls(id=candidate_id(origin), origin=origin, source_text=source_text)

    @property
    def unit(self) -> SourceUnit:
        # Racing threads may both parse; parse is pure, so the results are
        # interchangeable and the last assignment wins harmlessly.
        if self._unit is None:
            self._unit = parse(self.source_text)
        return self._unit


@dataclass(frozen=True)
class CorpusFilter:
    require_try_catch: bool = True
    require_exception_mention: bool = True
    max_sloc: int = 300
    min_sloc: int = 3

    def __post_init__(self) -> None:
        if self.min_sloc > self.max_sloc:
            raise ValueError("min_sloc must not exceed max_sloc")


@dataclass(frozen=True)
class Exclusion:
    candidate_id: str
    reason: str  # unlexable | no-handler | no-exception-mention | too-short | too-long


def apply_filter_detailed(
    candidates: list[Candidate],
    corpus_filter: CorpusFilter,
    query: SearchQuery | None = None,
) -> tuple[list[Candidate], list[Exclusion]]:
    """Order-preserving filter; every drop is recorded with a reason code."""
    if corpus_filter.require_exception_mention and query is None:
        raise ValueError("exception-mention filtering needs the search query")
    kept: list[Candidate] = []
    excluded: list[Exclusion] = []
    for cand in candidates:
        reason = _exclusion_reason(cand, corpus_filter, query)
        if reason is None:
            kept.append(cand)
        else:
            excluded.append(Exclusion(cand.id, reason))
    return kept, excluded


def apply_filter(
    candidates: list[Candidate],
    corpus_filter: CorpusFilter,
    query: SearchQuery | None = None,
) -> list[Candidate]:
    kept, _ = apply_filter_detailed(candidates, corpus_filter, query)
    return kept


def _exclusion_reason(
    cand: Candidate, corpus_filter: CorpusFilter, query: SearchQuery | None
) -> str | None:
    unit = cand.unit
    if not unit.tokens:
        return "unlexable"
    if corpus_filter.require_try_catch:
        handlers = unit.handlers
        if handlers.try_blocks == 0 and not handlers.catch_clauses:
            return "no-handler"
    if corpus_filter.require_exception_mention and query is not None:
        if not any(t.text == query.exception_name for t in unit.tokens):
            return "no-exception-mention"
    if unit.sloc < corpus_filter.min_sloc:
        return "too-short"
    if unit.sloc > corpus_filter.max_sloc:
        return "too-long"
    return None


def ingest_local(
    directory: str | Path,
    query: SearchQuery | None = None,
    corpus_filter: CorpusFilter | None = None,
) -> list[Candidate]:
    """Load every ``.java`` file under ``directory`` that passes the filter,
    in id order. Unreadable files are skipped with a diagnostic, not fatal."""
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {root}")
    corpus_filter = corpus_filter or CorpusFilter()

    candidates: list[Candidate] = []
    for path in sorted(root.rglob("*.java")):
        rel = path.relative_to(root).as_posix()
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            logger.warning("skipping unreadable corpus file %s: %s", path, exc)
            continue
        candidates.append(Candidate.from_origin(LocalOrigin(rel), text))

    kept, excluded = apply_filter_detailed(candidates, corpus_filter, query)
    for exc in excluded:
        logger.debug("filtered out %s: %s", exc.candidate_id, exc.reason)
    return sorted(kept, key=lambda c: c.id)


# ---------------------------------------------------------------------------
# Remote search client with on-disk cache
# ---------------------------------------------------------------------------


def _default_transport(url: str, headers: dict[str, str]) -> tuple[int, bytes]:
    request = urllib.request.Request(url, headers=headers)
    try:
        with urllib.request.urlopen(request, timeout=30) as response:
            return response.status, response.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read()
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkFailure(f"request to {url} failed: {exc}") from exc


def _cache_key(query: SearchQuery, orgs: list[str], limit: int) -> str:
    raw = f"{query.rendered}|{','.join(sorted(orgs))}|{limit}"
    return hashlib.sha256(raw.encode("utf-8")).hexdigest()[:16]


def cache_paths(cache_dir: Path, key: str) -> tuple[Path, Path]:
    base = cache_dir / key
    return base / "manifest.json", base / "files"


def _load_cached(cache_dir: Path, key: str) -> list[Candidate] | None:
    manifest_path, files_dir = cache_paths(cache_dir, key)
    if not manifest_path.is_file():
        return None
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    candidates = []
    for entry in manifest["candidates"]:
        origin = RemoteOrigin(entry["repo"], entry["path"], entry["url"])
        text = (files_dir / entry["file"]).read_text(encoding="utf-8")
        candidates.append(Candidate(id=entry["id"], origin=origin, source_text=text))
    return candidates


def _write_cache(
    cache_dir: Path,
    key: str,
    query: SearchQuery,
    orgs: list[str],
    limit: int,
    candidates: list[Candidate],
    complete: bool,
) -> None:
    manifest_path, files_dir = cache_paths(cache_dir, key)
    files_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for cand in sorted(candidates, key=lambda c: c.id):
        origin = cand.origin
        assert isinstance(origin, RemoteOrigin)
        filename = f"{cand.id}.java"
        (files_dir / filename).write_text(cand.source_text, encoding="utf-8")
        entries.append(
            {
                "id": cand.id,
                "repo": origin.repo,
                "path": origin.path,
                "url": origin.url,
                "file": filename,
            }
        )
    manifest = {
        "query": query.rendered,
        "orgs": sorted(orgs),
        "limit": limit,
        "complete": complete,
        "candidates": entries,
    }
    tmp = manifest_path.with_suffix(".tmp")
    tmp.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    tmp.replace(manifest_path)


def _request_json(
    url: str, headers: dict[str, str], transport: Transport, sleeper: Callable[[float], None]
) -> dict | list:
    for attempt in range(_MAX_ATTEMPTS):
        status, body = transport(url, headers)
        if status in (403, 429):
            if attempt == _MAX_ATTEMPTS - 1:
                raise RateLimited(f"still rate-limited after {_MAX_ATTEMPTS} attempts")
            delay = _BACKOFF_BASE * (2**attempt)
            logger.warning("rate limited (%d); retrying in %.0fs", status, delay)
            sleeper(delay)
            continue
        if status == 401:
            raise AuthMissing("the search API rejected the auth token")
        if status >= 400:
            raise NetworkFailure(f"search API returned HTTP {status} for {url}")
        return json.loads(body.decode("utf-8"))
    raise RateLimited("unreachable")  # pragma: no cover


def fetch_remote(
    query: SearchQuery,
    orgs: list[str],
    limit: int = 70,
    cache_dir: str | Path = ".catchrec-cache",
    token: str | None = None,
    transport: Transport | None = None,
    sleeper: Callable[[float], None] = time.sleep,
    max_in_flight: int = 4,
) -> list[Candidate]:
    """Code-search results for the query, scoped to ``orgs``, at most
    ``limit`` files. A warm cache is served without any network traffic; a
    rate-limited run returns the partial set it managed to download."""
    if limit <= 0:
        return []
    cache_dir = Path(cache_dir)
    key = _cache_key(query, orgs, limit)
    cached = _load_cached(cache_dir, key)
    if cached is not None:
        return sorted(cached, key=lambda c: c.id)

    token = token or os.environ.get(TOKEN_ENV_VAR)
    if not token:
        raise AuthMissing(f"set {TOKEN_ENV_VAR} to use remote search")
    transport = transport or _default_transport
    headers = {
        "Authorization": f"Bearer {token}",
        "Accept": "application/vnd.github+json",
        "User-Agent": "catchrec",
    }

    items: list[dict] = []
    complete = True
    try:
        for org in orgs:
            if len(items) >= limit:
                break
            q = f"{query.rendered} language:java org:{org}"
            url = f"{SEARCH_ENDPOINT}?{urllib.parse.urlencode({'q': q, 'per_page': limit})}"
            payload = _request_json(url, headers, transport, sleeper)
            items.extend(payload.get("items", [])[: limit - len(items)])
    except RateLimited:
        if not items:
            raise
        complete = False
        logger.warning("rate limited mid-search; continuing with %d items", len(items))

    raw_headers = dict(headers)
    raw_headers["Accept"] = "application/vnd.github.raw+json"

    def download(item: dict) -> Candidate | None:
        origin = RemoteOrigin(
            repo=item.get("repository", {}).get("full_name", ""),
            path=item.get("path", ""),
            url=item.get("html_url", ""),
        )
        try:
            status, body = transport(item["url"], raw_headers)
        except NetworkFailure as exc:
            logger.warning("skipping %s: %s", origin.path, exc)
            return None
        if status >= 400:
            logger.warning("skipping %s: HTTP %d", origin.path, status)
            return None
        return Candidate.from_origin(origin, body.decode("utf-8", errors="replace"))

    candidates: list[Candidate] = []
    seen_ids: set[str] = set()
    if items:
        with ThreadPoolExecutor(max_workers=min(max_in_flight, len(items))) as pool:
            for result in pool.map(download, items):
                if result is None:
                    complete = False
                elif result.id not in seen_ids:
                    seen_ids.add(result.id)
                    candidates.append(result)

    _write_cache(cache_dir, key, query, orgs, limit, candidates, complete)
    return sorted(candidates, key=lambda c: c.id)
