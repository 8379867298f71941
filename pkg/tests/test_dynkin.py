from divides import (
    body_euler, build_gamma, check_flag_edges, classify, coil, compute_faces,
    counts, fixture, gamma_to_dot, has_multi_edge, zigzag,
)
from divides.dynkin import SECTOR, SEGMENT


def gamma_of(m):
    return build_gamma(m, compute_faces(m))


class TestBuildGamma:
    def test_x1_single_vertex(self):
        g = gamma_of(fixture("X1"))
        assert g.mu == 1
        assert g.edges == ()
        assert (g.n_minus, g.n_double, g.n_plus) == (0, 1, 0)

    def test_loop(self):
        g = gamma_of(fixture("LOOP"))
        assert g.mu == 2
        assert (g.n_minus, g.n_double, g.n_plus) == (1, 1, 0)
        assert len(g.edges) == 1
        assert g.edges[0].species == SECTOR
        assert g.A == ((1,),)

    def test_lens(self):
        g = gamma_of(fixture("LENS"))
        assert g.mu == 3
        assert (g.n_minus, g.n_double, g.n_plus) == (1, 2, 0)
        assert g.A == ((1, 1),)
        pairs = sorted((e.i, e.j) for e in g.edges)
        assert pairs == [(1, 2), (1, 3)]
        assert all(e.species == SECTOR for e in g.edges)

    def test_zigzag3_path(self):
        g = gamma_of(zigzag(3))
        c = counts(g)
        assert (c.mu, c.e, c.f) == (5, 4, 0)
        # the diagram is a 5-vertex path: every vertex has degree <= 2
        deg = {}
        for e in g.edges:
            deg[e.i] = deg.get(e.i, 0) + 1
            deg[e.j] = deg.get(e.j, 0) + 1
        assert sorted(deg.values()) == [1, 1, 2, 2, 2]

    def test_fig2a_multi_edge_and_segment_species(self):
        g = gamma_of(fixture("FIG2A"))
        assert has_multi_edge(g)
        assert sorted(x for row in g.A for x in row) == [1, 2]
        assert sum(x for row in g.C for x in row) == 1
        species = sorted(e.species for e in g.edges)
        assert species.count(SEGMENT) == 1

    def test_numbering_contiguous(self, zoo):
        for name, m in zoo:
            g = gamma_of(m)
            kinds = [v.kind for v in g.vertices]
            assert kinds == (["minus"] * g.n_minus + ["double"] * g.n_double
                             + ["plus"] * g.n_plus), name
            assert [v.index for v in g.vertices] == list(range(1, g.mu + 1))

    def test_sector_count_bounded(self, zoo):
        for name, m in zoo:
            g = gamma_of(m)
            for d in range(g.n_double):
                at = sum(g.A[b][d] for b in range(g.n_minus)) + \
                    sum(g.B[d][p] for p in range(g.n_plus))
                assert at <= 4, name


class TestCounts:
    def test_x1(self):
        c = counts(gamma_of(fixture("X1")))
        assert (c.mu, c.e, c.f) == (1, 0, 0)

    def test_lens_euler(self):
        c = counts(gamma_of(fixture("LENS")))
        assert (c.mu, c.e, c.f) == (3, 2, 0)
        assert c.mu - c.e + c.f == 1

    def test_fig2a_flags_with_multiplicity(self):
        c = counts(gamma_of(fixture("FIG2A")))
        assert (c.mu, c.e, c.f) == (4, 5, 2)


class TestBodyEuler:
    def test_values(self):
        expected = {"X1": 1, "LOOP": 1, "LENS": 1, "FIG2A": 1, "FIG1": 3}
        for name, chi in expected.items():
            m = fixture(name)
            assert body_euler(m, compute_faces(m)) == chi, name

    def test_coil_family(self):
        # k isolated curl bodies, each a disk
        for k in (2, 3, 4):
            m = coil(k)
            assert body_euler(m, compute_faces(m)) == k

    def test_simple_implies_chi_one(self, zoo):
        for name, m in zoo:
            faces = compute_faces(m)
            if classify(m, faces).simple:
                assert body_euler(m, faces) == 1, name


class TestFlagEdges:
    def test_lens_empty(self):
        assert check_flag_edges(gamma_of(fixture("LENS"))) == []

    def test_zigzag4_empty(self):
        assert check_flag_edges(gamma_of(zigzag(4))) == []

    def test_fig2a_closed(self):
        # diagnostic only on non-cellular divides; here the one flag pair
        # does have its closing segment edge
        assert check_flag_edges(gamma_of(fixture("FIG2A"))) == []

    def test_detects_missing_closing_edge(self):
        from divides.dynkin import Gamma, GammaVertex
        g = Gamma(
            vertices=(GammaVertex("minus", 0, 1), GammaVertex("double", 0, 2),
                      GammaVertex("plus", 1, 3)),
            edges=(), n_minus=1, n_double=1, n_plus=1,
            A=((1,),), B=((1,),), C=((0,),),
        )
        assert check_flag_edges(g) == [(1, 2, 3)]


class TestDot:
    def test_x1(self):
        dot = gamma_to_dot(gamma_of(fixture("X1")))
        assert dot.count("shape=circle") == 1
        assert "--" not in dot

    def test_loop(self):
        dot = gamma_to_dot(gamma_of(fixture("LOOP")))
        assert dot.count("shape=box") == 1
        assert dot.count("--") == 1

    def test_lens(self):
        dot = gamma_to_dot(gamma_of(fixture("LENS")))
        assert dot.count("shape=circle") == 2
        assert dot.count("--") == 2

    def test_deterministic(self):
        g = gamma_of(zigzag(4))
        assert gamma_to_dot(g) == gamma_to_dot(g)

    def test_node_names(self):
        dot = gamma_to_dot(gamma_of(fixture("FIG2A")))
        assert "m1" in dot and "d2" in dot and "d3" in dot and "p4" in dot
        assert "style=dashed" in dot      # the one segment edge
