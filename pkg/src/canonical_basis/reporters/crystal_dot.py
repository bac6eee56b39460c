"""
Export of path crystals as Graphviz DOT, plain text, or monomial listings.
"""

from typing import Dict, List

from jinja2 import Environment, StrictUndefined

from canonical_basis.core.rootdata import format_word
from canonical_basis.crystal.littelmann import PathCrystal

_ENV = Environment(undefined=StrictUndefined, trim_blocks=True, lstrip_blocks=True, autoescape=False)

DOT_TEMPLATE = _ENV.from_string(
    """digraph crystal {
  label="{{ name }} {{ highest }}";
  node [shape=box, fontname="monospace"];
{% for node in nodes %}
  v{{ node.id }} [label="{{ node.label }}"];
{% endfor %}
{% for edge in edges %}
  v{{ edge.source }} -> v{{ edge.target }} [label="{{ edge.index }}"];
{% endfor %}
}
"""
)

TEXT_TEMPLATE = _ENV.from_string(
    """{% for node in nodes %}
{{ node.id }}: eta={{ node.eta }} phi={{ node.phi }} end={{ node.end }}{{ " f:" ~ node.out if node.out else "" }}
{% endfor %}
"""
)


def _weight(w: tuple) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _nodes(crystal: PathCrystal) -> List[Dict[str, object]]:
    nodes = []
    for v in range(len(crystal)):
        monomial = crystal.monomial(v)
        out = " ".join(
            f"{i}->{crystal.edges[(v, i)]}"
            for i in crystal.datum.indices()
            if (v, i) in crystal.edges
        )
        nodes.append(
            {
                "id": v,
                "eta": _weight(monomial.eta),
                "phi": format_word(monomial.phi),
                "end": _weight(crystal.endpoint(v)),
                "label": f"{_weight(monomial.eta)} {_weight(crystal.endpoint(v))}",
                "out": out,
            }
        )
    return nodes


def render_crystal_dot(crystal: PathCrystal) -> str:
    """Vertices labelled by eta and endpoint; edges labelled by the simple index."""
    edges = [
        {"source": v, "target": w, "index": i} for (v, i), w in sorted(crystal.edges.items())
    ]
    return DOT_TEMPLATE.render(
        name=crystal.datum.name,
        highest=_weight(crystal.highest_weight),
        nodes=_nodes(crystal),
        edges=edges,
    )


def render_crystal_text(crystal: PathCrystal) -> str:
    return TEXT_TEMPLATE.render(nodes=_nodes(crystal))


def render_monomials(crystal: PathCrystal) -> str:
    """One line per vertex: phi, eta and F_pi."""
    lines = []
    for v in range(len(crystal)):
        monomial = crystal.monomial(v)
        lines.append(
            f"{v}\t{_weight(crystal.endpoint(v))}\t{format_word(monomial.phi)}\t"
            f"{_weight(monomial.eta)}\t{monomial.render()}"
        )
    return "\n".join(lines)


def render_crystal(crystal: PathCrystal, fmt: str = "dot") -> str:
    if fmt == "dot":
        return render_crystal_dot(crystal)
    if fmt == "text":
        return render_crystal_text(crystal)
    raise ValueError(f"unsupported crystal format: {fmt}")
