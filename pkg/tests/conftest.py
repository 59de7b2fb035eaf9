from hypothesis import strategies as st

from curvebounds.laurent import LaurentPoly2

exponents = st.integers(min_value=-4, max_value=4)
coeffs = st.integers(min_value=-50, max_value=50)

laurent_polys = st.dictionaries(st.tuples(exponents, exponents), coeffs, max_size=6).map(LaurentPoly2)


@st.composite
def unimodular_matrices(draw):
    # product of elementary moves keeps det = +-1
    m = [[1, 0], [0, 1]]
    for _ in range(draw(st.integers(0, 5))):
        move = draw(st.sampled_from(["add01", "add10", "swap", "neg"]))
        t = draw(st.integers(-3, 3))
        if move == "add01":
            m = [[m[0][0] + t * m[1][0], m[0][1] + t * m[1][1]], m[1]]
        elif move == "add10":
            m = [m[0], [m[1][0] + t * m[0][0], m[1][1] + t * m[0][1]]]
        elif move == "swap":
            m = [m[1], m[0]]
        else:
            m = [[-m[0][0], -m[0][1]], m[1]]
    return m
