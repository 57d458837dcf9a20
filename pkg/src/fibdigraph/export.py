"""Serializers for digraphs: DOT, edge-list CSV, JSON and plain text."""

from __future__ import annotations

import csv
import io
import json

from .digraph import Digraph, degree_profile


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Digraph, name: str = "G") -> str:
    """One node per vertex label; an arc of multiplicity m is written m times."""
    lines = [f"digraph {_dot_id(name)} {{"]
    for lab in g.labels:
        lines.append(f"  {_dot_id(lab)};")
    for u, v, m in g.arcs:
        edge = f"  {_dot_id(g.labels[u])} -> {_dot_id(g.labels[v])};"
        lines.extend([edge] * m)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: Digraph) -> str:
    """Edge list with header ``tail,head,multiplicity`` over vertex labels.

    Labels containing commas (alphabets above 10) are quoted.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["tail", "head", "multiplicity"])
    for u, v, m in g.arcs:
        w.writerow([g.labels[u], g.labels[v], m])
    return buf.getvalue()


def to_json_obj(g: Digraph, name: str = "G") -> dict:
    out = {
        "name": name,
        "order": g.n,
        "size": g.arc_count,
        "vertices": list(g.labels),
        "arcs": [[g.labels[u], g.labels[v], m] for u, v, m in g.arcs],
    }
    if g.lineage is not None:
        out["lineage"] = [list(x.walk) for x in g.lineage]
    return out


def to_json(g: Digraph, name: str = "G") -> str:
    return json.dumps(to_json_obj(g, name), indent=2) + "\n"


def to_text(g: Digraph, name: str = "G") -> str:
    prof = degree_profile(g)
    lines = [f"{name}: {g.n} vertices, {g.arc_count} arcs"]
    lines.append("out-degrees: " + ", ".join(f"{k}:{v}" for k, v in prof["out"].items()))
    for u in range(g.n):
        heads = []
        for v, m in g.out_neighbors(u):
            heads.extend([g.labels[v]] * m)
        lines.append(f"{g.labels[u]} -> {' '.join(heads)}")
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> Digraph:
    """Inverse of :func:`to_csv`; vertices are ordered by first appearance.

    Isolated vertices are not representable in the edge list and are lost.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows or rows[0] != ["tail", "head", "multiplicity"]:
        raise ValueError("missing tail,head,multiplicity header")
    labels: dict[str, int] = {}
    arcs = []
    for tail, head, mult in rows[1:]:
        for lab in (tail, head):
            labels.setdefault(lab, len(labels))
        arcs.append((labels[tail], labels[head], int(mult)))
    return Digraph(list(labels), arcs)


FORMATS = {"dot": to_dot, "csv": lambda g, name="G": to_csv(g), "json": to_json, "text": to_text}
