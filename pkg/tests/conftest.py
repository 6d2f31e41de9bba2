import math

from hypothesis import strategies as st

from fusionkl.level import Level

LEVELS = [Level(2, 1), Level(3, 1), Level(3, 2), Level(4, 1), Level(5, 2), Level(5, 3), Level(7, 2)]


@st.composite
def levels(draw, max_p=7):
    p = draw(st.integers(2, max_p))
    q = draw(st.integers(1, 3 * p).filter(lambda q: math.gcd(p, q) == 1))
    return Level(p, q)
