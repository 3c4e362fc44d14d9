"""Reading and writing presentations, traces and certificates

Every JSON document written here carries "format_version". Integers beyond 2^53 are
written as decimal strings so that any JSON reader keeps them exact.
"""
import json
import os
from collections.abc import Mapping
from typing import Any, Optional, Union

import yaml

from acbench.errors import ParseError
from acbench.moves.trace import MoveTrace
from acbench.presentations.fixtures import parse_fixture_spec
from acbench.presentations.presentation import Presentation
from acbench.solvers.certificate import AreaCertificate
from acbench.utils import get_logger
from acbench.words import Alphabet, Word, parse_expression

log = get_logger(__name__)

FORMAT_VERSION = 1
MAX_SAFE_INT = 2**53

PathLike = Union[str, os.PathLike]


def jsonable(obj: Any) -> Any:
    """Copy of `obj` with big integers as strings and tuples as lists"""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > MAX_SAFE_INT else obj
    if isinstance(obj, Mapping):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(data: Mapping[str, Any]) -> str:
    document: dict[str, Any] = {"format_version": FORMAT_VERSION}
    document.update(jsonable(data))
    return json.dumps(document, indent=2)


def write_json(data: Mapping[str, Any], path: PathLike) -> None:
    with open(path, "w") as f:
        f.write(dumps(data) + "\n")


def _load_mapping(path: PathLike) -> dict[str, Any]:
    with open(path) as f:
        text = f.read()
    try:
        if str(path).endswith((".yaml", ".yml")):
            data = yaml.safe_load(text)
        else:
            data = json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ParseError(f"Could not read {path}: {e}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path} does not hold a mapping")
    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"{path} has format_version {version}, expected {FORMAT_VERSION}")
    return data


def read_presentation(path: PathLike) -> Presentation:
    """Read `< gens | rels >` from .txt, or a {generators, relators} mapping from .json/.yaml.
    Mappings may nest the presentation under "presentation", or under "initial" of a
    trace, possibly itself under "trace"."""
    if str(path).endswith((".json", ".yaml", ".yml")):
        data = _load_mapping(path)
        for key in ("trace", "presentation", "initial"):
            if key in data:
                data = data[key]
        try:
            return Presentation.from_dict(data)
        except KeyError as e:
            raise ParseError(f"{path} is missing {e}") from None
    with open(path) as f:
        return Presentation.parse(f.read())


def resolve_presentation(source: str) -> Presentation:
    """A presentation from a file path, literal `< ... >` text or a fixture name such as s2"""
    if os.path.exists(source):
        return read_presentation(source)
    if source.strip().startswith("<"):
        return Presentation.parse(source)
    return parse_fixture_spec(source)


def read_word(text: str, alphabet: Alphabet) -> Word:
    """Parse a word, or read it from a file when `text` names one"""
    if os.path.exists(text):
        with open(text) as f:
            text = f.read()
    return parse_expression(text.strip(), alphabet)


def read_trace(path: PathLike) -> MoveTrace:
    data = _load_mapping(path)
    if "trace" in data:
        data = data["trace"]
    try:
        return MoveTrace.from_dict(data)
    except KeyError as e:
        raise ParseError(f"{path} is missing {e}") from None


def read_certificate(path: PathLike) -> AreaCertificate:
    data = _load_mapping(path)
    if "certificate" in data:
        data = data["certificate"]
    try:
        return AreaCertificate.from_dict(data)
    except KeyError as e:
        raise ParseError(f"{path} is missing {e}") from None


def write_trace(
    trace: MoveTrace, path: PathLike, extra: Optional[Mapping[str, Any]] = None
) -> None:
    data: dict[str, Any] = {"trace": trace.to_dict()}
    data.update(extra or {})
    write_json(data, path)
    log.info(f"Wrote a {len(trace)}-move trace to {path}")
