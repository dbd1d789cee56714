from fractions import Fraction

from hypothesis import strategies as st

from bispinor_qc.scalar import ExactScalar


def _scalar_strategy(bound: int, denominators):
    ints = st.integers(min_value=-bound, max_value=bound)
    return st.builds(
        lambda n0, n1, n2, n3, d: ExactScalar(*(Fraction(n, d) for n in (n0, n1, n2, n3))),
        ints, ints, ints, ints, st.sampled_from(denominators),
    )


scalars = _scalar_strategy(60, [1, 2, 3, 4, 5, 6, 8, 12])
nonzero_scalars = scalars.filter(lambda a: not a.is_zero())
# cheap entries for matrix-level properties
entries = _scalar_strategy(4, [1, 2, 3])

thetas = st.floats(min_value=1e-6, max_value=3.141592653589793 - 1e-6)
phis = st.floats(min_value=0.0, max_value=6.283185307179586, exclude_max=True)
angles = st.floats(min_value=-6.0, max_value=6.0, allow_nan=False)
