import pytest
from hypothesis import given
from hypothesis import strategies as st

from sizeramsey.cyclic import ball, sigma, sigma_minus, sigma_plus
from sizeramsey.errors import PreconditionError


@pytest.mark.parametrize(
    "c, w, i, expected",
    [(1, 5, 0, (1, 4)), (2, 4, 0, (2,)), (2, 7, 6, (1, 4))],
)
def test_sigma_examples(c, w, i, expected):
    assert sigma(c, w, i) == expected


def test_sigma_halves():
    assert sigma_plus(1, 5, 4) == 0
    assert sigma_minus(1, 5, 0) == 4
    assert sigma_plus(2, 4, 0) == sigma_minus(2, 4, 0) == 2


@pytest.mark.parametrize(
    "k, w, i, expected",
    [(0, 7, 3, ()), (2, 7, 6, (0, 1, 4, 5)), (2, 5, 0, (1, 2, 3, 4))],
)
def test_ball_examples(k, w, i, expected):
    assert ball(k, w, i) == expected


@pytest.mark.parametrize(
    "call",
    [
        lambda: sigma(0, 5, 0),
        lambda: sigma(5, 5, 0),
        lambda: sigma(1, 5, 5),
        lambda: sigma(1, 1, 0),
        lambda: ball(5, 5, 0),
        lambda: ball(-1, 5, 0),
        lambda: sigma_plus(1, 3, -1),
    ],
)
def test_out_of_range_raises(call):
    with pytest.raises(PreconditionError):
        call()


@st.composite
def offsets(draw):
    w = draw(st.integers(2, 40))
    return draw(st.integers(1, w - 1)), w, draw(st.integers(0, w - 1))


@given(offsets())
def test_sigma_is_union_of_halves_and_excludes_i(args):
    c, w, i = args
    out = sigma(c, w, i)
    assert set(out) == {sigma_plus(c, w, i), sigma_minus(c, w, i)}
    assert i not in out
    assert (len(out) == 1) == (2 * c == w)
    assert list(out) == sorted(out)


@given(offsets())
def test_ball_matches_cyclic_distance(args):
    k, w, i = args
    dist = lambda x: min((x - i) % w, (i - x) % w)
    assert set(ball(k, w, i)) == {x for x in range(w) if 1 <= dist(x) <= k}
