import pytest
from hypothesis import given, settings

from knotbeta.diagram import (
    BraidWord,
    ClosedDiagram,
    DiagramError,
    DiagramSyntaxError,
    DiagramValidationError,
    from_braid,
    make_long,
    parse_braid,
    parse_long_pd,
    parse_pd,
    render_braid,
    render_pd,
    validate,
)
from knotbeta.examples import example_text
from strategies import knot_braids

STANDARD_TREFOIL = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"


def test_empty_text_is_unknot():
    d = parse_pd("")
    assert d.n == 0 and d.edge_count == 0
    assert validate(d) == []


def test_paper_fixture_parses():
    d = parse_pd(example_text("paper"))
    assert d.n == 6 and d.edge_count == 12
    assert validate(d) == []


def test_single_kink():
    d = parse_pd("X(0,1,1,0)")
    assert d.n == 1 and validate(d) == []
    # over-strand enters at port b, so it runs b -> d: negative
    assert d.sign(0) == -1


def test_labels_renumbered_along_orientation():
    d = parse_pd("X(10,50,20,40) X(30,10,40,60) X(50,30,60,20)")
    assert validate(d) == []
    assert sorted(v for q in d.crossings for v in q) == sorted(list(range(6)) * 2)
    for e in range(d.edge_count):
        # edge e enters the crossing that edge e+1 leaves, through the opposite port
        ci, p = d.head(e)
        assert d.tail((e + 1) % d.edge_count) == (ci, (p + 2) % 4)


def test_syntax_error_reports_position():
    with pytest.raises(DiagramSyntaxError) as err:
        parse_pd("X(0,1,1,0)\n  Y(1,2)")
    assert (err.value.line, err.value.column) == (2, 3)


def test_comments_and_directives_ignored_by_parse_pd():
    assert parse_pd("# kink\nbasepoint 1\nX(0,1,1,0) # trailing\n").n == 1


def test_multiplicity_diagnostic():
    diags = validate(ClosedDiagram(((0, 1, 2, 0), (1, 2, 4, 4))))
    assert "edge 3 multiplicity 1" not in diags  # 3 never appears
    diags = validate(ClosedDiagram(((0, 1, 1, 3),)))
    assert "edge 3 multiplicity 1" in diags
    assert "edge 0 multiplicity 1" in diags


def test_two_kinks_are_two_components():
    assert validate(ClosedDiagram(((0, 1, 1, 0), (2, 3, 3, 2)))) == ["2 components"]


def test_orientation_inconsistency():
    # reversing the under-strand of one trefoil crossing
    diags = validate(ClosedDiagram(((1, 3, 0, 4), (2, 0, 3, 5), (4, 2, 5, 1))))
    assert any("orientation inconsistency" in d for d in diags)
    with pytest.raises(DiagramValidationError):
        parse_pd("X(2,4,1,5) X(3,1,4,6) X(5,3,6,2)")


def test_nonplanar_quadruples_rejected():
    # single consistent component whose map has 3 faces instead of 5
    diags = validate(ClosedDiagram(((1, 2, 0, 3), (3, 4, 5, 1), (0, 5, 2, 4))))
    assert diags and "not planar" in diags[-1]


def test_validate_range():
    assert validate(ClosedDiagram(((5, 6, 6, 5),))) == ["edge labels are not exactly 0..1"]


def test_from_braid_unknot():
    assert from_braid(BraidWord(1, ())).n == 0


def test_from_braid_trefoil_hand_built():
    # s1^3 on two strands: raw crossings X(1,3,2,0) X(3,5,4,2) X(5,1,0,4)
    # relabelled along the walk 0,3,4,1,2,5 from edge 0
    d = from_braid(BraidWord(2, (1, 1, 1)))
    assert d.crossings == ((3, 1, 4, 0), (1, 5, 2, 4), (5, 3, 0, 2))
    assert [d.sign(i) for i in range(3)] == [1, 1, 1]


def test_from_braid_hopf_link_rejected():
    with pytest.raises(DiagramValidationError, match="2 components"):
        from_braid(BraidWord(2, (1, 1)))


def test_braid_word_range():
    with pytest.raises(DiagramError):
        BraidWord(2, (2,))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("strands 2; s1 s1 s1", BraidWord(2, (1, 1, 1))),
        ("strands 3\ns1 s2^-1 s1 s2^-1", BraidWord(3, (1, -2, 1, -2))),
        ("strands 3 1 -2 1 -2", BraidWord(3, (1, -2, 1, -2))),
        ("s1 s2", BraidWord(3, (1, 2))),
    ],
)
def test_parse_braid(text, expected):
    assert parse_braid(text) == expected


def test_braid_render_round_trip():
    w = BraidWord(4, (1, -3, 2, 2, -1))
    assert parse_braid(render_braid(w)) == w


def test_make_long_defaults():
    lk = make_long(parse_pd(""), 0)
    assert lk.n == 0
    lk = make_long(from_braid(BraidWord(2, (1, 1, 1))), 0)
    assert lk.n == 3
    assert sorted(lk.crossing_order) == [1, 2, 3]
    with pytest.raises(DiagramError):
        make_long(from_braid(BraidWord(2, (1, 1, 1))), 6)


def test_make_long_rejects_bad_orders():
    d = parse_pd(STANDARD_TREFOIL)
    with pytest.raises(DiagramError):
        make_long(d, 0, crossing_order=(1, 1, 2))
    with pytest.raises(DiagramError):
        make_long(d, 0, region_order=((1, 0), (1, 0), (2, 0)))


def test_paper_numbering_from_file():
    lk = parse_long_pd(example_text("paper"))
    assert lk.basepoint_edge == 0
    assert lk.crossing_order == (1, 2, 3, 4, 5, 6)
    assert lk.region_order[0] == (6, 0)


def test_long_render_round_trip(paper):
    again = parse_long_pd(render_pd(paper))
    assert again == paper


@settings(max_examples=60, deadline=None)
@given(knot_braids())
def test_render_parse_round_trip(d):
    assert parse_pd(render_pd(d)) == d


@settings(max_examples=60, deadline=None)
@given(knot_braids())
def test_braid_closures_validate(d):
    assert validate(d) == []
    assert d.edge_count == 2 * d.n


@settings(max_examples=40, deadline=None)
@given(knot_braids())
def test_mirror_flips_every_sign(d):
    m = d.mirror()
    assert validate(m) == []
    assert [m.sign(i) for i in range(m.n)] == [-d.sign(i) for i in range(d.n)]
