"""Reader for graph6 corpus files."""

import logging
from pathlib import Path
from typing import Iterator, NamedTuple, Union

from graphs.graph6 import parse_graph6
from graphs.models import Graph
from shared.exceptions import CorpusError, ParseError
from shared.validators import sanitize_graph6_line

logger = logging.getLogger(__name__)


class CorpusEntry(NamedTuple):
    """One graph read from a corpus file."""

    line: int
    graph6: str
    graph: Graph


def read_corpus(path: Union[str, Path], n: int) -> Iterator[CorpusEntry]:
    """
    Read a UTF-8 corpus with one graph6 string per line.

    Blank lines, '#' comments and a leading '>>graph6<<' header are ignored.

    Args:
        path: Corpus file
        n: Vertex count every graph must have

    Yields:
        Entries in file order

    Raises:
        CorpusError: If the file cannot be read, a line does not parse, or
            a graph has the wrong vertex count
    """
    path = Path(path)
    try:
        handle = path.open("r", encoding="utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read corpus {path}: {e.strerror or e}")

    line_number = 0
    with handle:
        while True:
            try:
                raw = handle.readline()
            except UnicodeDecodeError:
                raise CorpusError("not valid UTF-8", line=line_number + 1)
            if not raw:
                break
            line_number += 1

            value = sanitize_graph6_line(raw)
            if value is None:
                continue

            try:
                graph = parse_graph6(value)
            except ParseError as e:
                raise CorpusError(e.message, line=line_number)

            if graph.n != n:
                raise CorpusError(
                    f"graph has {graph.n} vertices, expected {n}", line=line_number
                )

            yield CorpusEntry(line_number, value, graph)

    logger.debug(f"Read {line_number} lines from {path}")
