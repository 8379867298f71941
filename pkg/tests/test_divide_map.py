import json

import pytest

from divides import (
    MINUS, OUTER, REGION, DivideError, classify, compute_faces, fixture,
    from_chords, parse_divide, trace_branches,
)
from divides.divide_map import segment_faces, walk_vertices


def doc(endpoints, crossings, edges):
    return json.dumps({
        "format": "divide-map/1",
        "endpoints": endpoints,
        "crossings": crossings,
        "edges": [{"a": list(a), "b": list(b)} for a, b in edges],
    })


X1_DOC = doc(["e1", "e2", "e3", "e4"], ["c1"],
             [(("e1", 0), ("c1", 0)), (("e2", 0), ("c1", 1)),
              (("e3", 0), ("c1", 2)), (("e4", 0), ("c1", 3))])

LOOP_DOC = doc(["e1", "e2"], ["c1"],
               [(("e1", 0), ("c1", 0)), (("c1", 1), ("c1", 2)),
                (("c1", 3), ("e2", 0))])


class TestParse:
    def test_x1(self):
        m = parse_divide(X1_DOC)
        assert m.r == 2
        assert m.delta == 1

    def test_loop(self):
        m = parse_divide(LOOP_DOC)
        assert m.r == 1
        assert m.delta == 1

    def test_slot_reuse(self):
        bad = doc(["e1", "e2", "e3", "e4"], ["c1"],
                  [(("e1", 0), ("c1", 0)), (("e2", 0), ("c1", 0)),
                   (("e3", 0), ("c1", 2)), (("e4", 0), ("c1", 3))])
        with pytest.raises(DivideError, match="slot reuse"):
            parse_divide(bad)

    def test_unused_slot(self):
        bad = doc(["e1", "e2"], ["c1"],
                  [(("e1", 0), ("c1", 0)), (("e2", 0), ("c1", 1))])
        with pytest.raises(DivideError, match="unused slot"):
            parse_divide(bad)

    def test_odd_endpoint_count(self):
        bad = doc(["e1", "e2", "e3"], [],
                  [(("e1", 0), ("e2", 0))])
        with pytest.raises(DivideError, match="odd endpoint count"):
            parse_divide(bad)

    def test_endpoint_slot_must_be_zero(self):
        bad = doc(["e1", "e2"], [], [(("e1", 1), ("e2", 0))])
        with pytest.raises(DivideError, match="slot 0"):
            parse_divide(bad)

    def test_crossing_slot_range(self):
        bad = doc(["e1", "e2"], ["c1"],
                  [(("e1", 0), ("c1", 4)), (("c1", 1), ("c1", 2)),
                   (("c1", 3), ("e2", 0))])
        with pytest.raises(DivideError, match="out of range"):
            parse_divide(bad)

    def test_duplicate_label(self):
        bad = doc(["e1", "e1"], [], [(("e1", 0), ("e1", 0))])
        with pytest.raises(DivideError, match="duplicate label"):
            parse_divide(bad)

    def test_unknown_label(self):
        bad = doc(["e1", "e2"], [], [(("e1", 0), ("zz", 0))])
        with pytest.raises(DivideError, match="bad attachment"):
            parse_divide(bad)

    def test_bad_format_field(self):
        with pytest.raises(DivideError, match="format"):
            parse_divide(json.dumps({"format": "nope", "endpoints": [],
                                     "crossings": [], "edges": []}))

    def test_not_json(self):
        with pytest.raises(DivideError, match="malformed"):
            parse_divide("{")

    def test_closed_branch(self):
        # a chord plus a free-floating figure-eight component
        bad = doc(["e1", "e2"], ["c1"],
                  [(("e1", 0), ("e2", 0)), (("c1", 0), ("c1", 1)),
                   (("c1", 2), ("c1", 3))])
        with pytest.raises(DivideError, match="closed branch"):
            parse_divide(bad)

    def test_planarity_failure(self):
        # non-interleaved boundary order with a crossing rotation forcing
        # the two chords through one another: not realizable in the disk
        bad = doc(["e1", "e2", "e3", "e4"], ["c1"],
                  [(("e1", 0), ("c1", 0)), (("e2", 0), ("c1", 2)),
                   (("e3", 0), ("c1", 1)), (("e4", 0), ("c1", 3))])
        with pytest.raises(DivideError, match="planarity failure"):
            parse_divide(bad)

    def test_note_field_ignored(self):
        d = json.loads(X1_DOC)
        d["note"] = "annotation"
        parse_divide(json.dumps(d))


class TestBranches:
    def test_x1_two_branches(self):
        m = parse_divide(X1_DOC)
        branches = trace_branches(m)
        assert len(branches) == 2
        ends = {frozenset((m.dart_vertex[w[0]],
                           m.dart_vertex[w[-1] ^ 1])) for w in branches}
        # slots pair {0,2} and {1,3}: e1-e3 and e2-e4
        assert ends == {frozenset((0, 2)), frozenset((1, 3))}

    def test_loop_single_branch_visits_twice(self):
        m = parse_divide(LOOP_DOC)
        (walk,) = trace_branches(m)
        crossing_visits = [m.dart_vertex[d ^ 1] for d in walk
                           if not m.is_endpoint_vertex(m.dart_vertex[d ^ 1])]
        assert crossing_visits.count(2) == 2   # vertex id 2 is c1

    def test_lens_two_branches_each_crossing_once(self):
        m = fixture("LENS")
        branches = trace_branches(m)
        assert len(branches) == 2
        for walk in branches:
            inner = [m.dart_vertex[d ^ 1] for d in walk[:-1]]
            assert len(inner) == 2 and len(set(inner)) == 2

    def test_branch_partition(self, zoo):
        for name, m in zoo:
            branches = trace_branches(m)
            edges_seen = [d // 2 for w in branches for d in w]
            assert len(edges_seen) == m.n_divide_edges, name
            assert len(set(edges_seen)) == m.n_divide_edges, name


class TestFaces:
    def test_x1_all_outer(self):
        m = parse_divide(X1_DOC)
        faces = compute_faces(m)
        assert len(faces.faces) == 4           # 1 + 8 - 5
        assert all(f.kind == OUTER for f in faces.faces)
        assert faces.region_count() == 0

    def test_loop_faces(self):
        m = parse_divide(LOOP_DOC)
        faces = compute_faces(m)
        assert len(faces.faces) == 3
        regions = [f for f in faces.faces if f.kind == REGION]
        assert len(regions) == 1
        assert regions[0].sign == MINUS
        assert len(regions[0].darts) == 1      # single dart inside the curl

    def test_lens_faces(self):
        m = fixture("LENS")
        faces = compute_faces(m)
        assert len(faces.faces) == 5           # 1 + 10 - 6
        kinds = sorted(f.kind for f in faces.faces)
        assert kinds == [OUTER] * 4 + [REGION]

    def test_euler_count(self, zoo):
        for name, m in zoo:
            faces = compute_faces(m)
            v = len(m.endpoints) + len(m.crossings)
            e = m.n_divide_edges + len(m.endpoints)
            assert len(faces.faces) == 1 + e - v, name

    def test_sign_alternation_across_segments(self, zoo):
        for name, m in zoo:
            faces = compute_faces(m)
            for k in range(m.n_divide_edges):
                f1, f2 = segment_faces(m, faces, k)
                assert f1 != f2, name
                assert faces.faces[f1].sign == -faces.faces[f2].sign, name

    def test_sector_signs_alternate_at_crossings(self, zoo):
        for name, m in zoo:
            faces = compute_faces(m)
            for c in range(m.delta):
                v = len(m.endpoints) + c
                signs = [faces.faces[faces.corner_face[(v, i)]].sign
                         for i in range(4)]
                assert signs[0] == -signs[1] == signs[2] == -signs[3], name

    def test_region_walk_hygiene(self, zoo):
        for name, m in zoo:
            faces = compute_faces(m)
            for fi in faces.regions:
                for d in faces.faces[fi].darts:
                    assert not m.is_boundary_dart(d), name
                    assert not m.is_endpoint_vertex(m.dart_vertex[d]), name

    def test_flip_changes_only_signs(self, zoo):
        for name, m in zoo:
            a = compute_faces(m)
            b = compute_faces(m, flip=True)
            assert a.regions == b.regions, name
            for fa, fb in zip(a.faces, b.faces):
                assert fa.darts == fb.darts and fa.kind == fb.kind, name
                assert fa.sign == -fb.sign, name


class TestClassify:
    def test_x1(self):
        m = parse_divide(X1_DOC)
        st = classify(m, compute_faces(m))
        assert (st.connected, st.cellular, st.simple) == (True, True, True)

    def test_loop(self):
        m = parse_divide(LOOP_DOC)
        st = classify(m, compute_faces(m))
        assert (st.connected, st.cellular, st.simple) == (True, True, True)

    def test_fig2b_not_simple(self):
        m = fixture("FIG2B")
        st = classify(m, compute_faces(m))
        assert st.connected and not st.simple

    def test_fig2a_pinched_region(self):
        m = fixture("FIG2A")
        faces = compute_faces(m)
        st = classify(m, faces)
        assert st.connected and not st.cellular
        pinched = [fi for fi in faces.regions
                   if len(set(walk_vertices(m, faces.faces[fi])))
                   != len(faces.faces[fi].darts)]
        assert len(pinched) == 1

    def test_disconnected_chords(self):
        # two chords on disjoint arcs of the circle never cross
        from fractions import Fraction as F
        from divides import Chord, ChordSet
        cs = ChordSet(chords=(Chord(F(-5), F(-2)), Chord(F(1), F(4))))
        m = from_chords(cs)
        st = classify(m, compute_faces(m))
        assert m.delta == 0
        assert not st.connected
        assert not st.simple

    def test_simple_iff_no_splitting_cut(self):
        # coil(2): the spine between the curls has outer faces on both
        # sides and splits the double points 1|1
        from divides import coil
        m = coil(2)
        st = classify(m, compute_faces(m))
        assert not st.simple
        m = coil(1)
        st = classify(m, compute_faces(m))
        assert st.simple
