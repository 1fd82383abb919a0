"""
Line-oriented text format for sketching assignments.

    #BACOSKETCH v1 K_u=<int> K_v=<int> gamma=<decimal> scu=<0|1> scheme=<name>
    U<TAB><token><TAB><primary_id>[<TAB><secondary_id>]     one line per user
    I<TAB><token><TAB><cluster_id>                          one line per item
"""

import io
import logging
import math
import re
from typing import IO, Iterable, List, Optional, Sequence, Union

import numpy as np

from coclust_api.errors import AssignmentFormatError, InvalidInputError
from coclust_api.sketch.models import SketchAssignment

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
_HEADER = re.compile(
    r"^#BACOSKETCH v(?P<version>\d+) K_u=(?P<k_u>\d+) K_v=(?P<k_v>\d+) "
    r"gamma=(?P<gamma>\S+) scu=(?P<scu>[01]) scheme=(?P<scheme>\S+)$"
)
_ID = re.compile(r"^\d+$")


def _check_tokens(tokens: Sequence[str], kind: str) -> None:
    for token in tokens:
        if not token or "\t" in token or "\n" in token or "\r" in token:
            raise InvalidInputError(f"{kind} token {token!r} cannot be written (empty or contains tab/newline)")


def write_assignment(assignment: SketchAssignment, sink: IO[str],
                     user_tokens: Optional[Sequence[str]] = None,
                     item_tokens: Optional[Sequence[str]] = None) -> None:
    """Serialize ``assignment``; tokens default to the ones it carries."""
    user_tokens = user_tokens if user_tokens is not None else assignment.user_tokens
    item_tokens = item_tokens if item_tokens is not None else assignment.item_tokens
    if user_tokens is None or item_tokens is None:
        raise InvalidInputError("token maps are required to write an assignment")
    if len(user_tokens) != assignment.n_users or len(item_tokens) != assignment.n_items:
        raise InvalidInputError("token maps do not match the assignment sizes")
    if not math.isfinite(assignment.gamma):
        raise InvalidInputError(f"gamma must be finite, got {assignment.gamma}")
    _check_tokens(user_tokens, "user")
    _check_tokens(item_tokens, "item")

    sink.write(
        f"#BACOSKETCH v{FORMAT_VERSION} K_u={assignment.k_user} K_v={assignment.k_item} "
        f"gamma={assignment.gamma!r} scu={int(assignment.scu)} scheme={assignment.scheme}\n"
    )
    primary = assignment.user_primary.tolist()
    if assignment.user_secondary is not None:
        for token, p, s in zip(user_tokens, primary, assignment.user_secondary.tolist()):
            sink.write(f"U\t{token}\t{p}\t{s}\n")
    else:
        for token, p in zip(user_tokens, primary):
            sink.write(f"U\t{token}\t{p}\n")
    for token, c in zip(item_tokens, assignment.item_cluster.tolist()):
        sink.write(f"I\t{token}\t{c}\n")


def _parse_id(text: str, k: int, lineno: int) -> int:
    if not _ID.match(text):
        raise AssignmentFormatError(f"id {text!r} is not a base-10 integer", lineno)
    value = int(text)
    if value >= k:
        raise AssignmentFormatError(f"id {value} out of range [0, {k})", lineno)
    return value


def read_assignment(source: Union[str, Iterable[str]]) -> SketchAssignment:
    """Parse an assignment written by ``write_assignment``."""
    lines = iter(source.splitlines() if isinstance(source, str) else source)
    header = next(lines, None)
    if header is None:
        raise AssignmentFormatError("missing header", 1)
    match = _HEADER.match(header.rstrip("\r\n"))
    if not match:
        raise AssignmentFormatError("malformed header", 1)
    if int(match["version"]) != FORMAT_VERSION:
        raise AssignmentFormatError(f"unsupported format version v{match['version']}", 1)
    k_user, k_item = int(match["k_u"]), int(match["k_v"])
    scu = match["scu"] == "1"
    try:
        gamma = float(match["gamma"])
    except ValueError:
        raise AssignmentFormatError(f"gamma {match['gamma']!r} is not a number", 1) from None

    user_tokens: List[str] = []
    primary: List[int] = []
    secondary: List[int] = []
    item_tokens: List[str] = []
    items: List[int] = []
    user_fields = 4 if scu else 3

    for lineno, raw in enumerate(lines, start=2):
        line = raw.rstrip("\r\n")
        fields = line.split("\t")
        kind = fields[0]
        if kind == "U":
            if item_tokens:
                raise AssignmentFormatError("user line after item lines", lineno)
            if len(fields) != user_fields:
                raise AssignmentFormatError(
                    f"user line needs {user_fields} fields with scu={int(scu)}, got {len(fields)}", lineno
                )
            user_tokens.append(fields[1])
            primary.append(_parse_id(fields[2], k_user, lineno))
            if scu:
                secondary.append(_parse_id(fields[3], k_user, lineno))
        elif kind == "I":
            if len(fields) != 3:
                raise AssignmentFormatError(f"item line needs 3 fields, got {len(fields)}", lineno)
            item_tokens.append(fields[1])
            items.append(_parse_id(fields[2], k_item, lineno))
        else:
            raise AssignmentFormatError(f"unknown record type {kind!r}", lineno)

    if len(set(primary) | set(secondary)) != k_user:
        raise AssignmentFormatError(f"user ids do not cover [0, {k_user}) without gaps")
    if len(set(items)) != k_item:
        raise AssignmentFormatError(f"item ids do not cover [0, {k_item}) without gaps")

    return SketchAssignment(
        user_primary=np.asarray(primary, dtype=np.int64),
        item_cluster=np.asarray(items, dtype=np.int64),
        k_user=k_user,
        k_item=k_item,
        gamma=gamma,
        scheme=match["scheme"],
        user_secondary=np.asarray(secondary, dtype=np.int64) if scu else None,
        user_tokens=tuple(user_tokens),
        item_tokens=tuple(item_tokens),
    )


def save_assignment(path: str, assignment: SketchAssignment) -> None:
    """Write an assignment file to disk."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        write_assignment(assignment, f)
    logger.info(f"💾 Assignment saved to {path}")


def load_assignment(path: str) -> SketchAssignment:
    """Read an assignment file from disk."""
    with open(path, "rb") as f:
        data = f.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise AssignmentFormatError(f"{path} is not valid UTF-8 ({e.reason})", line) from None
    assignment = read_assignment(io.StringIO(text))
    logger.info(f"📂 Assignment loaded from {path}: {assignment.n_users} users, {assignment.n_items} items")
    return assignment
