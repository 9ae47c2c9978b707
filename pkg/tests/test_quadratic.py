import pytest
from hypothesis import given
from hypothesis import strategies as st

from simpson_symplectic.integrators import QuadraticSegment, basis_eval, segment_derivatives, segment_value

thetas = st.floats(min_value=0.0, max_value=1.0)
reals = st.floats(min_value=-100, max_value=100)


@pytest.mark.parametrize("theta, expected", [(0.0, (1, 0, 0)), (0.5, (0, 1, 0)), (1.0, (0, 0, 1))])
def test_basis_nodal(theta, expected):
    assert basis_eval(theta) == pytest.approx(expected, abs=1e-15)


@given(thetas)
def test_partition_of_unity(theta):
    assert sum(basis_eval(theta)) == pytest.approx(1.0, abs=1e-14)


def test_basis_rejects_out_of_range():
    with pytest.raises(ValueError):
        basis_eval(1.5)


def test_segment_value_examples():
    assert segment_value(QuadraticSegment(1, 1, 1, 0.3), 0.37) == pytest.approx(1.0, abs=1e-15)
    assert segment_value(QuadraticSegment(0, 1, 2, 1.0), 0.5) == pytest.approx(1.0)
    assert segment_value(QuadraticSegment(0, 1, 0, 1.0), 0.25) == pytest.approx(0.75)


@given(a=reals, b=reals, c=reals, h=st.floats(0.01, 10), theta=thetas)
def test_segment_reproduces_quadratics(a, b, c, h, theta):
    f = lambda t: a + b * t + c * t * t
    seg = QuadraticSegment(f(0), f(h / 2), f(h), h)
    assert seg.value(theta * h) == pytest.approx(f(theta * h), abs=1e-9 * (1 + abs(a) + abs(b) * h + abs(c) * h * h))
    gl, gm, gr = segment_derivatives(seg)
    scale = 1e-9 * (1 + abs(b) + abs(c) * h + (abs(a) + 1) / h)
    assert gl == pytest.approx(b, abs=scale)
    assert gm == pytest.approx(b + c * h, abs=scale)
    assert gr == pytest.approx(b + 2 * c * h, abs=scale)


@pytest.mark.parametrize(
    "nodes, h, expected",
    [((0, 1, 2), 2.0, (1, 1, 1)), ((0, 1, 0), 1.0, (4, 0, -4)), ((1, 1, 1), 0.5, (0, 0, 0))],
)
def test_segment_derivative_examples(nodes, h, expected):
    assert segment_derivatives(QuadraticSegment(*nodes, h)) == pytest.approx(expected, abs=1e-14)


@given(ql=reals, qm=reals, qr=reals, h=st.floats(0.01, 10))
def test_mid_derivative_is_average(ql, qm, qr, h):
    gl, gm, gr = segment_derivatives(QuadraticSegment(ql, qm, qr, h))
    assert gm == pytest.approx(0.5 * (gl + gr), abs=1e-9 * (abs(ql) + abs(qm) + abs(qr) + 1) / h)
