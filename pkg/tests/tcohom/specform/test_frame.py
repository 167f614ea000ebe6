"""test the frame module."""

import pytest

from tcohom.specform import Frame, Leg, frames, frames_of_degree


@pytest.mark.parametrize(
    ("legs", "sign", "want"),
    [
        ((Leg.DZ1, Leg.DZB1), 1, (Leg.DZ1, Leg.DZB1)),
        ((Leg.DZB1, Leg.DZ1), -1, (Leg.DZ1, Leg.DZB1)),
        ((Leg.DZB2, Leg.DZ2, Leg.DZ1), -1, (Leg.DZ1, Leg.DZ2, Leg.DZB2)),
        ((Leg.DZ2, Leg.DZ2), 0, ()),
    ],
)
def test_from_legs(legs: tuple[Leg, ...], sign: int, want: tuple[Leg, ...]) -> None:
    """Test sorting legs into canonical order with the permutation sign."""
    got_sign, frame = Frame.from_legs(legs)
    assert got_sign == sign
    assert frame.legs == want


def test_of_and_index_sets() -> None:
    """Test building frames from index sets."""
    frame = Frame.of((1, 2), (2,))
    assert frame.legs == (Leg.DZ1, Leg.DZ2, Leg.DZB2)
    assert frame.holo == (1, 2)
    assert frame.anti == (2,)
    assert frame.bidegree == (2, 1)
    assert frame.z2_legs == 2
    assert frame.label == "dz1^dz2^dzb2"
    assert str(Frame()) == "1"

    with pytest.raises(ValueError, match="increasing"):
        Frame.of((2, 1))


@pytest.mark.parametrize(
    ("frame", "sign", "want"),
    [
        (Frame.of((1,), (1,)), -1, Frame.of((1,), (1,))),
        (Frame.of((1,), (2,)), -1, Frame.of((2,), (1,))),
        (Frame.of((1, 2)), 1, Frame.of((), (1, 2))),
        (Frame.of((1, 2), (1, 2)), 1, Frame.of((1, 2), (1, 2))),
    ],
)
def test_conjugate(frame: Frame, sign: int, want: Frame) -> None:
    """Test that conjugation has the sign (-1)^{|I||J|}."""
    assert frame.conjugate() == (sign, want)


def test_add_left() -> None:
    """Test that new legs are wedged on the left."""
    assert Frame.of((1,)).add_left(Leg.DZB1) == (-1, Frame.of((1,), (1,)))
    assert Frame.of((), (1,)).add_left(Leg.DZ1) == (1, Frame.of((1,), (1,)))
    assert Frame.of((1,)).add_left(Leg.DZ1)[0] == 0


@pytest.mark.parametrize(
    ("p", "q", "count"),
    [(0, 0, 1), (1, 0, 2), (1, 1, 4), (2, 1, 2), (2, 2, 1), (3, 0, 0), (-1, 0, 0)],
)
def test_frames(p: int, q: int, count: int) -> None:
    """Test the number of frames per bidegree."""
    assert len(frames(p, q)) == count
    assert all(f.bidegree == (p, q) for f in frames(p, q))


def test_frames_of_degree() -> None:
    """Test the number of frames per total degree."""
    assert [len(frames_of_degree(k)) for k in range(5)] == [1, 4, 6, 4, 1]
