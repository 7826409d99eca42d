from fractions import Fraction as F

import pytest

from griesskit.tables import ConflictingEntry, TableBuilder, UnresolvedPair, lin


def test_unwritten_pair_is_reported():
    tb = TableBuilder(["a", "b"])
    tb.ising("a")
    tb.ising("b")
    assert tb.missing() == [("a", "b")]
    with pytest.raises(UnresolvedPair):
        tb.build()


def test_conflicting_charts():
    tb = TableBuilder(["a", "b"])
    tb.two_b("a", "b")
    with pytest.raises(ConflictingEntry):
        tb.product("a", "b", lin((F(1), "a")), "other chart")


def test_agreeing_charts_are_fine():
    tb = TableBuilder(["a", "b"])
    tb.two_b("a", "b")
    tb.orthogonal("a", "b", "again")
    A = tb.build()
    assert A.inner(A["a"], A["b"]) == 0


def test_alias_expands():
    tb = TableBuilder(["a", "b", "a.b"])
    tb.alias("s", lin((F(1), "a"), (F(1), "b")))
    assert tb.expand({"s": F(2)}) == {"a": F(2), "b": F(2)}
