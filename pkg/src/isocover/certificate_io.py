"""CoverCertificate <-> JSON.

Layout (field order is fixed)::

    {
      "format_version": 1,
      "family": "k4",
      "graph": "<graph6>",   "labels": [...],          # labels in graph6 order
      "source": "<graph6>",  "source_labels": [...],
      "subdivision": {"v0~v1": ["s(v0,v1,1)", ...], ...},
      "parts": [{"vertices": [...], "role": "...", "apex": "a1", "radius": 2,
                 "pathwidth": null}, ...]
    }
"""
from __future__ import annotations

import json

from .constructions import CoverCertificate, Part
from .errors import InputError
from .formats import from_graph6, to_graph6
from .labels import parse_label

FORMAT_VERSION = 1
_SEP = "~"


def certificate_to_dict(cert: CoverCertificate) -> dict:
    G, X = cert.graph, cert.source
    subdivision = {}
    for e in X.edges:
        key = e if e in cert.subdivision else (e[1], e[0])
        internal = cert.subdivision[key]
        subdivision[f"{key[0]}{_SEP}{key[1]}"] = [str(s) for s in internal]
    return {
        "format_version": FORMAT_VERSION,
        "family": cert.family,
        "graph": to_graph6(G),
        "labels": [str(v) for v in G.vertices],
        "source": to_graph6(X),
        "source_labels": [str(v) for v in X.vertices],
        "subdivision": subdivision,
        "parts": [
            {
                "vertices": [str(v) for v in p.vertices],
                "role": p.role,
                "apex": None if p.apex is None else str(p.apex),
                "radius": p.radius,
                "pathwidth": p.pathwidth,
            }
            for p in cert.parts
        ],
    }


def dumps(cert: CoverCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2, ensure_ascii=False) + "\n"


def _labels(raw, what):
    if not isinstance(raw, list):
        raise InputError(f"{what} must be a list")
    try:
        return [parse_label(x) for x in raw]
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad label in {what}: {exc}") from None


def certificate_from_dict(doc) -> CoverCertificate:
    if not isinstance(doc, dict):
        raise InputError("certificate must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {version!r}")
    try:
        G = from_graph6(doc["graph"], _labels(doc["labels"], "labels"))
        X = from_graph6(doc["source"], _labels(doc["source_labels"], "source_labels"))
        subdivision = {}
        for key, internal in doc["subdivision"].items():
            ends = key.split(_SEP)
            if len(ends) != 2:
                raise InputError(f"bad subdivision key {key!r}")
            u, v = _labels(ends, "subdivision key")
            subdivision[(u, v)] = tuple(_labels(internal, f"subdivision[{key}]"))
        parts = []
        for raw in doc["parts"]:
            apex = raw.get("apex")
            radius = raw.get("radius")
            pathwidth = raw.get("pathwidth")
            for name, value in (("radius", radius), ("pathwidth", pathwidth)):
                if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
                    raise InputError(f"part {name} must be an integer")
            parts.append(Part(
                tuple(_labels(raw["vertices"], "part vertices")),
                str(raw["role"]),
                None if apex is None else parse_label(apex),
                radius,
                pathwidth,
            ))
    except KeyError as exc:
        raise InputError(f"certificate is missing field {exc}") from None
    except (AttributeError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed certificate: {exc}") from None
    return CoverCertificate(G, X, subdivision, tuple(parts), str(doc.get("family", "")))


def loads(text: str) -> CoverCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not valid JSON: {exc}") from None
    return certificate_from_dict(doc)


def save(cert: CoverCertificate, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(cert))


def load(path) -> CoverCertificate:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
