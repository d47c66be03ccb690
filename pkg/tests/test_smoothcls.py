import pytest

from hilb3 import mono3, smoothcls, tancomb
from hilb3.errors import HasTripleError

I1 = mono3.parse_monomial_ideal("x^2, x*y, x*z, y^2, y*z, z^3")
I2 = mono3.parse_monomial_ideal("x^2, x*y, x*z, y^2, z^2")
M2 = mono3.parse_monomial_ideal("x^2,y^2,z^2,x*y,x*z,y*z")


def ev(s):
    return mono3.parse_monomial(s)


class TestFindTriple:
    def test_singular_staircase_example(self):
        t = smoothcls.find_triple(I1)
        assert t is not None
        assert {t.a, t.b, t.c} == {ev("x"), ev("y"), ev("z^2")}

    def test_smooth_staircase_example(self):
        assert smoothcls.find_triple(I2) is None

    def test_tripod(self):
        t = smoothcls.find_triple(M2)
        assert {t.a, t.b, t.c} == {ev("x"), ev("y"), ev("z")}

    def test_agrees_with_exhaustive_search(self):
        from itertools import permutations

        def exhaustive(ideal):
            soc = mono3.socle(ideal)
            for a, b, c in permutations(soc, 3):
                if a[0] > b[0] and a[0] > c[0] and b[1] > a[1] and b[1] > c[1] \
                        and c[2] > a[2] and c[2] > b[2]:
                    return True
            return False

        for d in range(1, 9):
            for ideal in mono3.enumerate_ideals(d):
                assert (smoothcls.find_triple(ideal) is not None) == exhaustive(ideal)


class TestSocleOrder:
    def test_two_element_socle(self):
        order = smoothcls.socle_order(I2)
        assert order[0] == (ev("y*z"), (1, 2))
        assert order[1][0] == ev("x")

    def test_singleton(self):
        ideal = mono3.parse_monomial_ideal("x, y^2, z^2")
        assert smoothcls.socle_order(ideal) == [(ev("y*z"), (0, 1))]

    def test_raises_when_triple_exists(self):
        with pytest.raises(HasTripleError):
            smoothcls.socle_order(I1)

    def test_domination_property(self):
        for d in range(1, 8):
            for ideal in mono3.enumerate_ideals(d):
                if smoothcls.find_triple(ideal) is not None:
                    continue
                order = smoothcls.socle_order(ideal)
                for p, (s, pair) in enumerate(order):
                    k = ({0, 1, 2} - set(pair)).pop()
                    for t, _ in order[p + 1:]:
                        assert s[pair[0]] >= t[pair[0]]
                        assert s[pair[1]] >= t[pair[1]]
                        assert s[k] < t[k]


class TestNoflipChain:
    def test_worked_example(self):
        cert = smoothcls.noflip_chain(I2)
        assert cert.multipliers == (ev("x"),)
        assert cert.colengths == (4, 1)
        assert cert.quotients[0] == mono3.parse_monomial_ideal("x, y^2, z^2")
        assert mono3.socle(cert.quotients[0]) == (ev("y*z"),)
        assert cert.quotients[1] == mono3.parse_monomial_ideal("x, y, z")

    def test_already_gorenstein(self):
        cert = smoothcls.noflip_chain(mono3.parse_monomial_ideal("x, y^2, z^2"))
        assert cert.multipliers == ()
        assert cert.colengths == (4,)

    def test_point(self):
        cert = smoothcls.noflip_chain(mono3.parse_monomial_ideal("x,y,z"))
        assert cert.multipliers == ()
        assert cert.colengths == (1,)

    def test_raises_on_triple(self):
        with pytest.raises(HasTripleError):
            smoothcls.noflip_chain(I1)

    def test_certificates_validate(self):
        for d in range(1, 9):
            for ideal in mono3.enumerate_ideals(d):
                if smoothcls.find_triple(ideal) is None:
                    cert = smoothcls.noflip_chain(ideal)
                    cert.validate(ideal)
                    assert sum(cert.colengths) == d


class TestClassify:
    def test_smooth(self):
        res = smoothcls.classify(I2)
        assert res.verdict == "smooth"
        assert res.chain is not None

    def test_singular(self):
        res = smoothcls.classify(I1)
        assert res.verdict == "singular"
        assert res.excess_lower_bound == 6

    def test_tripod_excess_exactly_six(self):
        res = smoothcls.classify(M2)
        assert res.verdict == "singular"
        assert tancomb.tangent_report(M2).excess == 6


class TestCensus:
    def test_prefix(self):
        rows = smoothcls.smooth_census(6)
        assert [r[2] for r in rows] == [1, 3, 6, 12, 21, 36]
        assert [r[1] for r in rows] == [1, 3, 6, 13, 24, 48]

    def test_csv_shape(self):
        text = smoothcls.census_csv(smoothcls.smooth_census(2))
        assert text.splitlines() == ["d,total_ideals,smooth_ideals", "1,1,1", "2,3,3"]

    def test_workers_agree(self):
        assert smoothcls.smooth_census(6, workers=2) == smoothcls.smooth_census(6)
