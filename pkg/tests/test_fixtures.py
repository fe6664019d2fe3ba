import pytest

from uptori import fixtures
from uptori.families import verify_family
from uptori.grids import TORUS, verify_upmatrix, verify_uptorus
from uptori.ledger import Triviality
from uptori.words import diamondicity_of, verify_upcycle, verify_upword


def _report(fx):
    obj = fx.build()
    if fx.kind == fixtures.FAMILY:
        return verify_family(obj, fx.param)
    if fx.kind == fixtures.CYCLE:
        return verify_upcycle(obj, fx.param)
    if fx.kind == fixtures.WORD:
        return verify_upword(obj, fx.param)
    check = verify_uptorus if fx.mode == TORUS else verify_upmatrix
    return check(obj, fx.param)


CHECKABLE = [n for n, f in fixtures.FIXTURES.items() if f.param is not None]


@pytest.mark.parametrize("name", CHECKABLE)
def test_fixture_claims(name):
    fx = fixtures.FIXTURES[name]
    rep = _report(fx)
    assert rep.valid == fx.valid
    if fx.diamondicity is not None:
        d = rep.diamondicity if fx.valid else diamondicity_of(fx.build(), fx.param)
        assert d == fx.diamondicity
    if fx.valid:
        trivial = rep.triviality != Triviality.NONTRIVIAL_PARTIAL
        assert trivial == fx.trivial


def test_fixture_lookup():
    assert "minimal" in fixtures.names()
    with pytest.raises(KeyError, match="unknown fixture"):
        fixtures.get("maximal")
