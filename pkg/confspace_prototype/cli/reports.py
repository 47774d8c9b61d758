"""Rendering of command reports as JSON, CSV or plain text"""

import csv
import io
import json
from typing import Dict, List

from ..__version__ import __version__
from .config import RunConfig


def with_echo(payload: Dict, config: RunConfig) -> Dict:
    """attach the input echo and the version tag"""
    return {"input": config.echo(), "version": __version__, "result": payload}


def to_json(report: Dict) -> str:
    """sorted keys, two space indent, trailing newline"""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _betti_rows(result: Dict) -> List[List]:
    betti = result["betti"]
    torsion = result.get("torsion", {})
    rows = []
    for degree in sorted(betti, key=int):
        orders = " ".join(str(t) for t in torsion.get(degree, []))
        rows.append([degree, betti[degree], orders])
    return rows


def _flatten(prefix: str, value, rows: List[List]) -> None:
    if isinstance(value, dict):
        for key in sorted(value, key=str):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, item in enumerate(value):
            _flatten(f"{prefix}.{i}", item, rows)
    else:
        rows.append([prefix, json.dumps(value, sort_keys=True)])


def to_csv(report: Dict) -> str:
    """Betti tables as ``degree,betti,torsion``, anything else as ``key,value``"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    result = report.get("result", {})
    if isinstance(result, dict) and "betti" in result:
        writer.writerow(["degree", "betti", "torsion"])
        writer.writerows(_betti_rows(result))
    else:
        rows: List[List] = []
        _flatten("", report, rows)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
    return buffer.getvalue()


def to_text(report: Dict) -> str:
    """one ``key: value`` line per leaf"""
    rows: List[List] = []
    _flatten("", report, rows)
    return "".join(f"{key}: {value}\n" for key, value in rows)


def render(report: Dict, fmt: str) -> str:
    """Render a report in one of the supported formats

    Raises:
        ValueError: on an unknown format
    """
    renderers = {"json": to_json, "csv": to_csv, "text": to_text}
    if fmt not in renderers:
        raise ValueError(f"format must be one of {sorted(renderers)}, got {fmt!r}")
    return renderers[fmt](report)
