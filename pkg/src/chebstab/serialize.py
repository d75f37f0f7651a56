"""Canonical structured-document (JSON) serialization.

Reports and cloud files must be byte-identical across runs with the same
inputs, so serialization is hand-rolled: insertion-ordered keys, floats
always rendered with 17 significant digits (lossless double round-trip),
two-space indentation, trailing newline.
"""

import json

import numpy as np


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def _emit(obj, out: list, indent: int):
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = list(obj.items())
        for k, (key, value) in enumerate(items):
            out.append(f'{pad}  {json.dumps(str(key))}: ')
            _emit(value, out, indent + 1)
            out.append(",\n" if k < len(items) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            out.append("[]")
            return
        out.append("[\n")
        for k, value in enumerate(seq):
            out.append(pad + "  ")
            _emit(value, out, indent + 1)
            out.append(",\n" if k < len(seq) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        out.append("true" if obj else "false")
    elif obj is None:
        out.append("null")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _emit(obj.tolist(), out, indent)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    out: list = []
    _emit(obj, out, 0)
    out.append("\n")
    return "".join(out)


def loads(text: str):
    return json.loads(text)
