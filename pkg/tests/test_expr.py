import pytest
from hypothesis import given
from hypothesis import strategies as st

import zdgraph as z
from zdgraph.expr import Cyclic, Matrix, Product, TableFile


def test_parse_examples():
    assert z.parse_ring_expr("Z6") == Cyclic(6)
    assert z.parse_ring_expr("Z2 x Z2 x Z2") == Product((Cyclic(2), Cyclic(2), Cyclic(2)))
    assert z.parse_ring_expr("M2(Z4)") == Matrix(2, Cyclic(4))
    assert z.parse_ring_expr("M2(Z2 x Z3)") == Matrix(2, Product((Cyclic(2), Cyclic(3))))
    assert z.parse_ring_expr("T(rings/gf4.tbl)") == TableFile("rings/gf4.tbl")


def test_parse_whitespace_and_parens():
    assert z.parse_ring_expr("  Z6  ") == Cyclic(6)
    assert z.parse_ring_expr("(Z2 x Z2) x Z2") == Product((Cyclic(2), Cyclic(2), Cyclic(2)))
    assert z.parse_ring_expr("((Z7))") == Cyclic(7)
    assert z.parse_ring_expr("M 2 ( Z 4 )") == Matrix(2, Cyclic(4))


def test_parse_rejects_zero_arguments():
    with pytest.raises(z.ParseError):
        z.parse_ring_expr("Z0")
    with pytest.raises(z.ParseError):
        z.parse_ring_expr("M0(Z2)")


def test_parse_error_details():
    with pytest.raises(z.ParseError) as err:
        z.parse_ring_expr("Z2 y Z3")
    assert err.value.offset == 3
    with pytest.raises(z.ParseError) as err:
        z.parse_ring_expr("Q5")
    assert err.value.offset == 0
    assert any("Z" in e for e in err.value.expected)
    with pytest.raises(z.ParseError):
        z.parse_ring_expr("M2(Z4")
    with pytest.raises(z.ParseError):
        z.parse_ring_expr("")


def test_parse_case_sensitive():
    with pytest.raises(z.ParseError):
        z.parse_ring_expr("z6")
    with pytest.raises(z.ParseError):
        z.parse_ring_expr("Z2 X Z3")


def test_unparse():
    assert z.unparse(z.parse_ring_expr("Z2 x Z2 x Z2")) == "Z2 x Z2 x Z2"
    assert z.unparse(z.parse_ring_expr("M2( Z2 x Z3 )")) == "M2(Z2 x Z3)"
    assert z.unparse(z.parse_ring_expr("(Z2 x Z3) x M2(Z2)")) == "Z2 x Z3 x M2(Z2)"


def _exprs(depth):
    leaf = st.one_of(
        st.integers(min_value=1, max_value=12).map(Cyclic),
        st.just(TableFile("some/file.tbl")),
    )
    if depth == 0:
        return leaf
    sub = _exprs(depth - 1)
    return st.one_of(
        leaf,
        st.builds(Matrix, st.integers(min_value=1, max_value=3), sub),
        st.lists(sub, min_size=2, max_size=3).map(
            lambda fs: Product(
                tuple(g for f in fs for g in (f.factors if isinstance(f, Product) else (f,)))
            )
        ),
    )


@given(_exprs(2))
def test_unparse_parse_roundtrip(expr):
    assert z.parse_ring_expr(z.unparse(expr)) == expr


def test_build_ring(rings):
    assert z.build_ring(z.parse_ring_expr("Z6")) == rings["Z6"]
    assert z.build_ring(z.parse_ring_expr("Z2 x Z2 x Z2")) == rings["Z2xZ2xZ2"]
    assert z.build_ring(z.parse_ring_expr("M2(Z2)")) == rings["M2(Z2)"]


def test_build_ring_table_file(tmp_path, rings):
    r = rings["Z4"]
    lines = [str(r.order)]
    lines += [" ".join(map(str, row)) for row in r.add_table.tolist()]
    lines += [" ".join(map(str, row)) for row in r.mul_table.tolist()]
    path = tmp_path / "z4.tbl"
    path.write_text("\n".join(lines))
    assert z.build_ring(z.parse_ring_expr(f"T({path})")) == r


def test_build_ring_capacity():
    with pytest.raises(z.CapacityError):
        z.build_ring(z.parse_ring_expr("M3(M2(Z7))"))
    with pytest.raises(z.CapacityError):
        z.build_ring(z.parse_ring_expr("Z100 x Z100"), cap=5000)
