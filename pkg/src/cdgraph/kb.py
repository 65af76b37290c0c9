"""Knowledge base of literature facts: which graphs are known to occur or not occur.

Storage is JSON lines, one record per line:

    {"graph6": "Ch", "status": "not_occurs", "source": "Sass, Corollary 5.5"}

Facts are keyed by isomorphism class (the stored labeling is irrelevant), and
a class may carry at most one fact; two records for the same class with
opposite statuses make the file unloadable.  The package ships a seed file of
citation-sourced exclusions; everything in it is treated as opaque input, the
rules never re-derive or overrule it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .classifier import Status
from .errors import CDGraphError, KBError
from .graphs import (
    DEFAULT_SIZE_CAP,
    CanonicalKey,
    Graph,
    canonical_key,
    format_graph6,
    graph_from_bits,
    parse_graph6,
)

_STATUS_WORDS = {Status.OCCURS.value, Status.DOES_NOT_OCCUR.value}


@dataclass(frozen=True)
class Fact:
    key: CanonicalKey
    status: Status
    source: str

    def __post_init__(self) -> None:
        if self.status is Status.UNKNOWN:
            raise KBError("a knowledge-base fact must be definite, not unknown")


@dataclass(frozen=True)
class KnowledgeBase:
    facts: Mapping[CanonicalKey, Fact]

    @classmethod
    def empty(cls) -> "KnowledgeBase":
        return cls(facts={})

    def __len__(self) -> int:
        return len(self.facts)


def load_kb(path: str | Path, *, max_n: int = DEFAULT_SIZE_CAP) -> KnowledgeBase:
    """Load a JSON-lines fact file; any defect is reported with its line number."""
    facts: dict[CanonicalKey, Fact] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise KBError(f"cannot read knowledge base {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise KBError(f"{path}:{lineno}: not valid JSON ({exc.msg})") from exc
        if not isinstance(record, dict):
            raise KBError(f"{path}:{lineno}: record must be a JSON object")
        missing = {"graph6", "status", "source"} - record.keys()
        if missing:
            raise KBError(f"{path}:{lineno}: missing field(s) {sorted(missing)}")
        status_word = record["status"]
        if status_word not in _STATUS_WORDS:
            raise KBError(
                f"{path}:{lineno}: status must be one of {sorted(_STATUS_WORDS)},"
                f" got {status_word!r}"
            )
        try:
            g = parse_graph6(str(record["graph6"]))
            key = canonical_key(g, max_n=max_n)
        except CDGraphError as exc:
            raise KBError(f"{path}:{lineno}: {exc}") from exc
        status = Status(status_word)
        prior = facts.get(key)
        if prior is not None:
            if prior.status is not status:
                raise KBError(
                    f"{path}:{lineno}: conflicting duplicate for graph6"
                    f" {record['graph6']!r}: {prior.status.value} vs {status.value}"
                )
            continue  # consistent duplicate, first record wins
        facts[key] = Fact(key=key, status=status, source=str(record["source"]))
    return KnowledgeBase(facts=facts)


def save_kb(kb: KnowledgeBase, path: str | Path) -> None:
    """Write one record per fact, sorted by key, canonical labeling."""
    lines = []
    for key in sorted(kb.facts):
        fact = kb.facts[key]
        record = {
            "graph6": format_graph6(graph_from_bits(key.n, key.bits)),
            "status": fact.status.value,
            "source": fact.source,
        }
        lines.append(json.dumps(record))
    Path(path).write_text("".join(line + "\n" for line in lines))


def lookup(kb: KnowledgeBase, g: Graph, *, max_n: int = DEFAULT_SIZE_CAP) -> Fact | None:
    """The fact for g's isomorphism class, if any."""
    if not kb.facts:
        return None
    return kb.facts.get(canonical_key(g, max_n=max_n))


def seed_kb_path() -> Path:
    """Filesystem path of the shipped seed knowledge base."""
    return Path(str(resources.files("cdgraph").joinpath("data/seed_kb.jsonl")))


def load_seed_kb() -> KnowledgeBase:
    return load_kb(seed_kb_path())
