"""Exports: the diagram as Graphviz DOT, a chord arrangement as SVG.

Writes files next to this script; render the DOT with `dot -Tsvg` if
Graphviz is available.
"""

import os

from divides import (
    build_gamma, compute_faces, fixture, gamma_to_dot, gen_chords, zigzag,
)
from divides.render import render_chords_svg

here = os.path.dirname(os.path.abspath(__file__))

for name, m in [("fig2a", fixture("FIG2A")), ("zigzag4", zigzag(4))]:
    gamma = build_gamma(m, compute_faces(m))
    path = os.path.join(here, f"{name}.dot")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(gamma_to_dot(gamma))
    print(f"wrote {path}")
    print(gamma_to_dot(gamma))

cs = gen_chords(6, seed=12)
path = os.path.join(here, "chords6.svg")
with open(path, "w", encoding="utf-8") as fh:
    fh.write(render_chords_svg(cs))
print(f"wrote {path} (regions shaded by checkerboard sign)")
