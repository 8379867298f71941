"""Side-by-side data: monodromy traces and closed walks on the diagram.

Whether the traces of the monodromy iterates can be expressed through the
walk generating function of the diagram is an open question; this module
only emits the exact paired table and asserts nothing beyond Tr(M) = 0 and
the handshake identity Tr(M^2) = 2e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynkin import Gamma
from .seifert import Matrix, mat_add, mat_mul, mat_trace, matrix_N, \
    monodromy_matrix, transpose

K_DEFAULT = 12
K_CAP = 64      # bounds arbitrary-precision growth in reports


@dataclass(frozen=True)
class WalkTable:
    """Rows (k, Tr(T^k), 1 - Tr(T^k), Tr(M^k)) for k = 1..K."""
    rows: tuple[tuple[int, int, int, int], ...]

    def to_csv(self) -> str:
        lines = ["k,tr_T_k,lefschetz_k,tr_M_k"]
        for row in self.rows:
            lines.append(",".join(str(x) for x in row))
        return "\n".join(lines) + "\n"


def adjacency(gamma: Gamma) -> Matrix:
    """Symmetric adjacency matrix of the diagram: N + tN."""
    n = matrix_N(gamma)
    return mat_add(n, transpose(n))


def walk_table(gamma: Gamma, k: int = K_DEFAULT) -> WalkTable:
    k = max(1, min(k, K_CAP))
    n = matrix_N(gamma)
    t = monodromy_matrix(n)
    m = mat_add(n, transpose(n))
    rows = []
    tp = t
    mp = m
    for i in range(1, k + 1):
        if i > 1:
            tp = mat_mul(tp, t)
            mp = mat_mul(mp, m)
        tr_t = mat_trace(tp)
        rows.append((i, tr_t, 1 - tr_t, mat_trace(mp)))
    return WalkTable(rows=tuple(rows))
