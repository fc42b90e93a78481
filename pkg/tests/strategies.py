"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from knotbeta.diagram import BraidWord, from_braid


def _join_components(strands, letters):
    """Append generators until the closure is a knot: a transposition of two
    strands in different cycles merges those cycles."""
    letters = list(letters)
    while True:
        perm = list(range(strands))
        for v in letters:
            i = abs(v) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        cycle_of = {}
        for s in range(strands):
            k = s
            while k not in cycle_of:
                cycle_of[k] = s
                k = perm[k]
        split = [i for i in range(strands - 1) if cycle_of[i] != cycle_of[i + 1]]
        if not split:
            return tuple(letters)
        letters.append(split[0] + 1)


@st.composite
def knot_braids(draw, max_len=10):
    strands = draw(st.integers(2, 4))
    letters = draw(
        st.lists(
            st.integers(1, strands - 1).flatmap(lambda g: st.sampled_from([g, -g])),
            min_size=0,
            max_size=max_len,
        )
    )
    return from_braid(BraidWord(strands, _join_components(strands, letters)))
