"""Frame interchange format and deterministic JSON output.

A frame file is a JSON object:

    {"version": "1", "K": int, "d": int, "n": int,
     "vectors": [[[re, im] * K] * d] * n,
     "metadata": {...}}            # optional

vectors[j][p][s] holds the coordinate p of vector j at spectrum point s
as a [re, im] pair. Floats are written with 17 significant digits, which
round-trips doubles exactly and makes serialization byte-deterministic:
generate -> write -> load -> re-write is the identity on bytes.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import FrameFormatError
from .module import Frame

FORMAT_VERSION = "1"


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def _write_json(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_format_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            if not isinstance(key, str):
                raise TypeError(f"JSON keys must be strings, got {key!r}")
            out.append(json.dumps(key))
            out.append(":")
            _write_json(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(",")
            _write_json(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Serialize to compact JSON with 17-significant-digit floats."""
    out: list[str] = []
    _write_json(obj, out)
    return "".join(out)


def frame_to_dict(frame: Frame, metadata: dict | None = None) -> dict:
    vectors = [
        [
            [[float(c.real), float(c.imag)] for c in frame.values[j, p, :]]
            for p in range(frame.d)
        ]
        for j in range(frame.n)
    ]
    doc = {"version": FORMAT_VERSION, "K": frame.K, "d": frame.d, "n": frame.n,
           "vectors": vectors}
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def frame_from_dict(doc) -> tuple[Frame, dict]:
    """Validate a parsed frame document and build the Frame.

    Raises FrameFormatError naming the first failed check.
    """
    if not isinstance(doc, dict):
        raise FrameFormatError("top level is not a JSON object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise FrameFormatError(f"unrecognized format version {version!r}")
    dims = {}
    for key in ("K", "d", "n"):
        value = doc.get(key)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise FrameFormatError(f"header field {key!r} must be a positive integer")
        dims[key] = value
    vectors = doc.get("vectors")
    if not isinstance(vectors, list) or len(vectors) != dims["n"]:
        raise FrameFormatError(f"'vectors' must be a list of n={dims['n']} entries")
    values = np.empty((dims["n"], dims["d"], dims["K"]), dtype=np.complex128)
    for j, vec in enumerate(vectors):
        if not isinstance(vec, list) or len(vec) != dims["d"]:
            raise FrameFormatError(f"vector {j} must have d={dims['d']} coordinates")
        for p, coord in enumerate(vec):
            if not isinstance(coord, list) or len(coord) != dims["K"]:
                raise FrameFormatError(
                    f"coordinate {p} of vector {j} must have K={dims['K']} values"
                )
            for s, pair in enumerate(coord):
                if (not isinstance(pair, list) or len(pair) != 2
                        or not all(isinstance(t, (int, float)) and not isinstance(t, bool)
                                   for t in pair)):
                    raise FrameFormatError(
                        f"value at vector {j}, coordinate {p}, point {s} "
                        "is not an [re, im] pair"
                    )
                re, im = float(pair[0]), float(pair[1])
                if not (math.isfinite(re) and math.isfinite(im)):
                    raise FrameFormatError(
                        f"non-finite value at vector {j}, coordinate {p}, point {s}"
                    )
                values[j, p, s] = complex(re, im)
    metadata = doc.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        raise FrameFormatError("'metadata' must be an object when present")
    return Frame(values), (metadata or {})


def save_frame(path, frame: Frame, metadata: dict | None = None) -> None:
    text = dumps(frame_to_dict(frame, metadata))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.write("\n")


def load_frame(path) -> tuple[Frame, dict]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FrameFormatError(f"invalid JSON: {exc}") from None
    return frame_from_dict(doc)
