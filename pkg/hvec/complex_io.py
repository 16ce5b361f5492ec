"""
Reading and writing simplicial complexes.

Two formats are understood:

* facet text (``.facets``, ``.txt``): one facet per line, whitespace
  separated vertex tokens, ``#`` starts a comment. A line holding only
  ``{}`` denotes the empty face, so a file with just that line is {∅}.
* JSON (``.json``): ``{"vertices": [...], "facets": [[...], ...]}``.
"""

import json
from pathlib import Path
from typing import Union

from loguru import logger
from pydantic import ValidationError

from .complexes import SimplicialComplex
from .errors import ComplexParseError
from .schemas import ComplexDocument

EMPTY_FACE_TOKEN = "{}"


def parse_facet_text(text: str, source: str | None = None) -> SimplicialComplex:
    """Parse the facet-list text format.

    Raises:
        ComplexParseError: On a facet that repeats a vertex, with its line number.
    """
    facets: list[list[str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == EMPTY_FACE_TOKEN:
            facets.append([])
            continue
        tokens = line.replace(",", " ").split()
        if EMPTY_FACE_TOKEN in tokens:
            raise ComplexParseError(f"'{EMPTY_FACE_TOKEN}' must stand alone on its line", source, line_no)
        if len(set(tokens)) != len(tokens):
            msg = f"facet repeats a vertex: {' '.join(tokens)}"
            logger.error(f"{source or '<text>'}:{line_no}: {msg}")
            raise ComplexParseError(msg, source, line_no)
        facets.append(tokens)
    if not facets:
        logger.warning(f"{source or '<text>'} lists no facets; reading it as the void complex")
    return SimplicialComplex.from_facets(facets)


def parse_json_complex(text: str, source: str | None = None) -> SimplicialComplex:
    """Parse the JSON format.

    Raises:
        ComplexParseError: On malformed JSON (with its line) or a schema violation.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in {source or '<text>'}: {e}")
        raise ComplexParseError(f"invalid JSON: {e.msg}", source, e.lineno) from e
    try:
        doc = ComplexDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        logger.error(f"Invalid complex document {source or '<text>'}: {first['msg']}")
        raise ComplexParseError(first["msg"], source) from e
    return SimplicialComplex.from_facets(doc.facets, vertices=doc.vertices)


def load_complex(path: Union[str, Path]) -> SimplicialComplex:
    """Load a complex from disk, choosing the parser by file suffix.

    Raises:
        ComplexParseError: If the file is missing or malformed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        logger.error(f"Complex file not found: {path}")
        raise ComplexParseError("file not found", str(path)) from None
    if path.suffix.lower() == ".json":
        cx = parse_json_complex(text, str(path))
    else:
        cx = parse_facet_text(text, str(path))
    logger.info(f"Loaded {path}: {cx.describe()}")
    return cx


def format_facet_text(cx: SimplicialComplex) -> str:
    lines = []
    for facet in cx.facets:
        lines.append(" ".join(cx.labels_of(facet)) if facet else EMPTY_FACE_TOKEN)
    return "\n".join(lines) + ("\n" if lines else "")


def format_json_complex(cx: SimplicialComplex) -> str:
    doc = ComplexDocument(vertices=list(cx.labels), facets=[list(cx.labels_of(f)) for f in cx.facets])
    return doc.model_dump_json(indent=2)


def write_complex(cx: SimplicialComplex, path: Union[str, Path]) -> None:
    path = Path(path)
    text = format_json_complex(cx) if path.suffix.lower() == ".json" else format_facet_text(cx)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {cx.describe()} to {path}")
