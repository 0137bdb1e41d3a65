import numpy as np
import pytest
from hypothesis import given, strategies as st

from wenoct.grid import ConfigurationError, Field, Grid, allocate_field


def test_allocate_zero_initialised():
    g = Grid((4, 4), (0.0, 0.0), (0.1, 0.1))
    f = allocate_field(g, 8)
    assert f.data.shape == (8, 10, 10)
    assert f.data.size == 8 * (4 + 2 * 3) ** 2
    assert not f.data.any()


def test_allocate_rejects_zero_components():
    g = Grid((4,), (0.0,), (0.1,))
    with pytest.raises(ConfigurationError):
        allocate_field(g, 0)


def test_line_has_ghosts_on_both_sides():
    g = Grid((10,), (0.0,), (0.1,))
    assert allocate_field(g, 1).data.shape == (1, 16)


@pytest.mark.parametrize(
    "index, expected", [((0, 0), (0.0, 0.0)), ((3, 0), (0.3, 0.0)), ((-1, 0), (-0.1, 0.0))]
)
def test_point_coords(index, expected):
    g = Grid((10, 10), (0.0, 0.0), (0.1, 0.1))
    assert g.point_coords(index) == pytest.approx(expected, abs=1e-15)


def test_point_coords_out_of_range():
    g = Grid((10,), (0.0,), (0.1,))
    with pytest.raises(IndexError):
        g.point_coords((13,))
    with pytest.raises(IndexError):
        g.point_coords((-4,))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=(4,), origin=(0.0,), spacing=(0.0,)),
        dict(n=(4,), origin=(0.0,), spacing=(0.1,), ghost=2),
        dict(n=(4, 4), origin=(0.0,), spacing=(0.1,)),
        dict(n=(1, 1, 1, 1), origin=(0.0,) * 4, spacing=(1.0,) * 4),
    ],
)
def test_invalid_grids(kwargs):
    with pytest.raises(ConfigurationError):
        Grid(**kwargs)


def test_uniform_conventions():
    per = Grid.uniform([0.0], [1.0], [10], [True])
    assert per.origin == (0.0,) and per.spacing[0] == pytest.approx(0.1)
    # the seam point is not duplicated
    assert per.axis_coords(0)[-1] == pytest.approx(0.9)
    cc = Grid.uniform([0.0], [1.0], [10], [False])
    assert cc.origin[0] == pytest.approx(0.05)
    assert cc.axis_coords(0)[-1] == pytest.approx(0.95)


@given(
    st.lists(st.integers(1, 40), min_size=1, max_size=3),
    st.floats(-5, 5),
    st.floats(0.01, 2.0),
    st.data(),
)
def test_index_coord_round_trip(n, origin, dx, data):
    nd = len(n)
    g = Grid(tuple(n), (origin,) * nd, (dx,) * nd)
    idx = tuple(data.draw(st.integers(0, k - 1)) for k in n)
    assert g.nearest_index(g.point_coords(idx)) == idx


def test_field_shape_checked():
    g = Grid((4,), (0.0,), (0.1,))
    with pytest.raises(ConfigurationError):
        Field(g, np.zeros((1, 9)))
    f = Field(g, np.zeros((2, 10)))
    assert f.ncomp == 2 and f.interior.shape == (2, 4)
