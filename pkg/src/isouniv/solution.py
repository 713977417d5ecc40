"""The result object every solver returns, and its JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .embed import Embedding, format_k, parse_k, verify_embedding
from .errors import InputError
from .graph import INF, Graph

METHODS = ("supertree", "forest-pipeline", "oracle", "greedy", "construction")


@dataclass(frozen=True)
class UniversalSolution:
    """A host graph with one witness embedding per input graph."""

    host: Graph
    embeddings: tuple[Embedding, ...]
    method: str
    k: float | int = INF
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return self.host.n

    def verify(self, inputs: Sequence[Graph]) -> bool:
        if len(inputs) != len(self.embeddings):
            raise InputError(f"{len(inputs)} inputs for {len(self.embeddings)} embeddings")
        return all(
            e.pattern_n == g.n and verify_embedding(g, self.host, e, self.k)
            for g, e in zip(inputs, self.embeddings)
        )

    def is_covering(self, inputs: Sequence[Graph]) -> bool:
        """Every host vertex and edge lies in the image of some input."""
        verts: set[int] = set()
        edges: set[tuple[int, int]] = set()
        for g, e in zip(inputs, self.embeddings):
            verts.update(e.map)
            for u, v in g.edges:
                a, b = e.map[u], e.map[v]
                edges.add((a, b) if a < b else (b, a))
        return len(verts) == self.host.n and edges == set(self.host.edges)

    def to_json(self) -> dict:
        out = {
            "size": self.size,
            "n": self.host.n,
            "edges": [list(e) for e in self.host.sorted_edges()],
            "k": format_k(self.k),
            "method": self.method,
            "embeddings": [e.to_json() for e in self.embeddings],
        }
        if self.meta:
            out["meta"] = self.meta
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "UniversalSolution":
        try:
            host = Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
            embs = tuple(Embedding.from_json(e) for e in obj["embeddings"])
            k = parse_k(obj.get("k", "inf"))
            method = str(obj.get("method", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed solution record: {exc}") from exc
        if "size" in obj and int(obj["size"]) != host.n:
            raise InputError("solution 'size' disagrees with 'n'")
        return cls(host, embs, method, k, dict(obj.get("meta", {})))
