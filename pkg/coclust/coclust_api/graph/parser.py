"""
Reader and writer for tab-separated interaction files.
"""

import io
import logging
from typing import IO, Iterable, List, Tuple, Union

from coclust_api.errors import EdgeListParseError
from coclust_api.graph.models import EdgeList

logger = logging.getLogger(__name__)


def parse_edge_list(stream: Union[str, Iterable[str]]) -> EdgeList:
    """
    Parse ``<user_token>\\t<item_token>`` lines; ``#`` lines are comments.

    Accepts a whole text or any iterable of lines (an open text file).
    """
    lines = stream.splitlines() if isinstance(stream, str) else stream
    pairs: List[Tuple[str, str]] = []

    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise EdgeListParseError(f"expected 2 tab-separated fields, got {len(fields)}", lineno)
        user, item = fields
        if not user or not item:
            raise EdgeListParseError("empty token", lineno)
        pairs.append((user, item))

    logger.debug(f"📂 Parsed {len(pairs)} interactions")
    return EdgeList(pairs=pairs)


def read_edge_list(path: str) -> EdgeList:
    """Parse an edge-list file from disk."""
    logger.info(f"📂 Reading edge list from {path}")
    with open(path, "rb") as f:
        data = f.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise EdgeListParseError(f"{path} is not valid UTF-8 ({e.reason})", line) from None
    return parse_edge_list(io.StringIO(text))


def write_edge_list(pairs: Iterable[Tuple[str, str]], sink: IO[str]) -> int:
    """Write interactions in the edge-list format; returns the number of lines."""
    count = 0
    for user, item in pairs:
        sink.write(f"{user}\t{item}\n")
        count += 1
    return count
