"""Training-free SDG classification of paragraphs.

The heavy lifting lives in the compiled ``_sdgtag`` extension. This module
re-exports it and adds small helpers for the embedding file formats that the
classifier reads: word tables and sentence caches.
"""

from __future__ import annotations

import json
import math
import os
from typing import Iterable, Mapping, Sequence

from ._sdgtag import (
    CORPUS_SIZE,
    NUM_GOALS,
    STRATEGIES,
    CacheMiss,
    Classifier,
    DataError,
    Error,
    best_ranked,
    cache_digest,
    canonicalize_text,
    emit_akn,
    lrap,
    normalize,
    process,
    stem,
    surface_tokens,
    text_digest,
    weighted_f1,
)

__all__ = [
    "CORPUS_SIZE",
    "NUM_GOALS",
    "STRATEGIES",
    "CacheMiss",
    "Classifier",
    "DataError",
    "Error",
    "best_ranked",
    "cache_digest",
    "canonicalize_text",
    "emit_akn",
    "lrap",
    "normalize",
    "process",
    "read_manifest",
    "read_texts",
    "stem",
    "surface_tokens",
    "text_digest",
    "weighted_f1",
    "write_sentence_cache",
    "write_word_table",
]

ENCODER_TAGS = ("dan", "transformer")


def _fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r}")
    s = repr(x)
    return s[:-2] if s.endswith(".0") else s


def _check_rows(rows: Mapping[str, Sequence[float]]) -> int:
    dims = {len(v) for v in rows.values()}
    if len(dims) > 1:
        raise ValueError(f"rows have mixed dimensions {sorted(dims)}")
    return dims.pop() if dims else 0


def write_word_table(path: str | os.PathLike, vectors: Mapping[str, Sequence[float]],
                     dimension: int | None = None) -> None:
    """Write ``token -> vector`` in the word-table format, rows sorted by token."""
    dim = dimension or _check_rows(vectors)
    if dim <= 0:
        raise ValueError("dimension must be positive")
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(f"{dim}\n")
        for token in sorted(vectors):
            if any(c.isspace() for c in token):
                raise ValueError(f"token {token!r} contains whitespace")
            vec = vectors[token]
            if len(vec) != dim:
                raise ValueError(f"token {token!r}: expected {dim} values, got {len(vec)}")
            out.write(token + "\t" + " ".join(_fmt(x) for x in vec) + "\n")


def write_sentence_cache(path: str | os.PathLike, encoder: str,
                         vectors: Mapping[str, Sequence[float]],
                         dimension: int | None = None) -> None:
    """Write ``digest -> vector`` in the sentence-cache format.

    Keys are digests as returned by :func:`cache_digest` (or listed by the
    ``preflight`` command), not raw texts.
    """
    if encoder not in ENCODER_TAGS:
        raise ValueError(f"encoder must be one of {ENCODER_TAGS}")
    dim = dimension or _check_rows(vectors)
    if dim <= 0:
        raise ValueError("dimension must be positive")
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(f"{dim}\t{encoder}\n")
        for digest in sorted(vectors):
            vec = vectors[digest]
            if len(vec) != dim:
                raise ValueError(f"{digest}: expected {dim} values, got {len(vec)}")
            out.write(digest + "\t" + " ".join(_fmt(x) for x in vec) + "\n")


def read_manifest(path: str | os.PathLike) -> list[str]:
    """Digests listed by ``sdgtag preflight``, one per line."""
    with open(path, encoding="utf-8") as f:
        return [line.strip() for line in f if line.strip()]


def read_texts(path: str | os.PathLike) -> dict[str, str]:
    """``digest -> text`` from a ``{"digest", "text"}`` JSONL file."""
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                rec = json.loads(line)
                out[rec["digest"]] = rec["text"]
    return out


def iter_jsonl(path: str | os.PathLike) -> Iterable[dict]:
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                yield json.loads(line)
