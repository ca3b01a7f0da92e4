"""Loading the shipped document set (or any directory of .lsc files)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .catalog import Catalog, link
from .dsl import SourceDocument, parse


class CorpusError(ValueError):
    pass


def read_sources(path: str | Path | None = None) -> list[tuple[str, str]]:
    """(display name, text) pairs, sorted by name.  None means the corpus
    shipped inside the package; a directory means its *.lsc files; a file
    means just that file."""
    if path is None:
        root = resources.files(__package__) / "corpus"
        pairs = [
            (entry.name, entry.read_text(encoding="utf-8"))
            for entry in root.iterdir()
            if entry.name.endswith(".lsc")
        ]
        return sorted(pairs)
    p = Path(path)
    if p.is_dir():
        return [
            (f.name, f.read_text(encoding="utf-8"))
            for f in sorted(p.glob("*.lsc"))
        ]
    if p.is_file():
        return [(p.name, p.read_text(encoding="utf-8"))]
    raise CorpusError(f"no such file or directory: {path}")


def parse_sources(sources: list[tuple[str, str]]) -> list[SourceDocument]:
    return [parse(text, path=name) for name, text in sources]


def load_corpus(path: str | Path | None = None) -> Catalog:
    """Parse and link a document set, insisting on clean sources."""
    docs = parse_sources(read_sources(path))
    problems = [
        f"{doc.path}:{diag}" for doc in docs for diag in doc.diagnostics
    ]
    if problems:
        raise CorpusError("\n".join(problems))
    return link(docs)
