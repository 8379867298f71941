"""SVG pictures of chord arrangements.

Only chord sets carry geometry; abstract maps are rejected upstream.
Regions are the complement components avoiding the boundary circle; for
chords they are convex polygons whose corners are crossing points, so the
face walks of the map give the polygons directly.
"""

from __future__ import annotations

from .divide_map import compute_faces, map_from_document
from .generators import ChordSet, _intersection, chords_to_map_document, \
    circle_point, interleaved

_SIZE = 500
_R = 230
_CENTER = _SIZE / 2
_FILL = {-1: "#9ecae1", 1: "#fdae6b"}      # minus: blue, plus: orange


def _xy(p) -> tuple[float, float]:
    return (_CENTER + _R * float(p[0]), _CENTER - _R * float(p[1]))


def render_chords_svg(cs: ChordSet) -> str:
    doc = chords_to_map_document(cs)
    m = map_from_document(doc)
    faces = compute_faces(m)

    # crossing coordinates, in the label order used by the map document
    coords = {}
    k = 0
    n = len(cs.chords)
    for i in range(n):
        for j in range(i + 1, n):
            if interleaved(cs.chords[i], cs.chords[j]):
                x, y, _ = _intersection(cs.chords[i], cs.chords[j])
                coords[len(m.endpoints) + k] = (x, y)
                k += 1

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'  <circle cx="{_CENTER}" cy="{_CENTER}" r="{_R}" fill="none" '
        'stroke="#444444" stroke-width="1.5"/>',
    ]

    for fi in faces.regions:
        face = faces.faces[fi]
        pts = []
        for d in face.darts:
            v = m.dart_vertex[d]
            x, y = _xy(coords[v])
            pts.append(f"{x:.2f},{y:.2f}")
        out.append(f'  <polygon points="{" ".join(pts)}" '
                   f'fill="{_FILL[face.sign]}" fill-opacity="0.6" '
                   'stroke="none"/>')

    for c in cs.chords:
        x1, y1 = _xy(circle_point(c.s))
        x2, y2 = _xy(circle_point(c.t))
        out.append(f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
                   f'y2="{y2:.2f}" stroke="#222222" stroke-width="2"/>')

    for v in sorted(coords):
        x, y = _xy(coords[v])
        out.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="4" '
                   'fill="#d62728"/>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
