import pytest

from dsl_algebra.algebra.exactness import COMPLEXES, exactness_check, exactness_table


@pytest.mark.parametrize("which", COMPLEXES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_complexes_are_exact(which, n):
    result = exactness_check(which, n)
    assert result.composite_zero
    assert result.exact
    assert result.kernel_second == result.rank_first


def test_exactness_table_degrees():
    rows = exactness_table("e1f1", [1, 2])
    assert [r.degree for r in rows] == [1, 2]
    assert rows[0].middle_dim == 2 * 4


def test_exactness_rejects_bad_arguments():
    with pytest.raises(ValueError):
        exactness_check("nope", 2)
    with pytest.raises(ValueError):
        exactness_check("e1f1", 0)
