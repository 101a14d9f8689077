import pytest
from hypothesis import given

from bnses import (
    BNN,
    EMPTY,
    DomainError,
    Opinion,
    ParameterLiteral,
    SoftExpertSet,
    complement,
    complement_value,
    equals,
    intersection,
    intersection_value,
    is_null,
    is_subset,
    key,
    make_null,
    negate_parameter,
    not_set,
    restrict_agree,
    restrict_disagree,
    union,
    union_value,
)
from helpers import TOL, random_set, soft_sets, values


def close(a, expected):
    return all(abs(x - y) <= TOL for x, y in zip(a, expected))


class TestKeys:
    def test_canonical_order(self):
        s = SoftExpertSet({
            ("b", "x", 1): {"u2": (0,) * 6, "u1": (0,) * 6},
            ("a", "y", 1): {"u1": (0,) * 6},
            ("a", "y", 0): {"u1": (0,) * 6},
            ("a", "x", 1, True): {"u1": (0,) * 6},
            ("a", "x", 1): {"u1": (0,) * 6},
        })
        assert [str(k) for k in s] == [
            "(a, x, 1)", "(a, y, 0)", "(a, y, 1)", "(not a, x, 1)", "(b, x, 1)"]
        # name first, then negation flag, then expert, disagree before agree
        assert list(s)[3].parameter.negated
        assert list(s[("b", "x", 1)]) == ["u1", "u2"]

    def test_empty_rows_dropped(self):
        s = SoftExpertSet({("a", "x", 1): {}, ("a", "x", 0): {"u": (0,) * 6}})
        assert len(s) == 1 and ("a", "x", 1) not in s

    def test_duplicate_key_rejected(self):
        with pytest.raises(DomainError):
            SoftExpertSet([(("a", "x", 1), {"u": (0,) * 6}),
                           (key("a", "x", 1), {"v": (0,) * 6})])

    def test_invalid_value_rejected(self):
        with pytest.raises(DomainError):
            SoftExpertSet({("a", "x", 1): {"u": (0, 0, 0, 0.5, 0, 0)}})

    def test_bad_ids(self):
        with pytest.raises(DomainError):
            ParameterLiteral("")
        with pytest.raises(DomainError):
            key("a", "", 1)
        with pytest.raises(ValueError):
            key("a", "x", 2)

    def test_negate_parameter(self):
        cheap = ParameterLiteral("cheap")
        assert negate_parameter(cheap) == ParameterLiteral("cheap", True)
        assert negate_parameter(ParameterLiteral("expensive", True)) == ParameterLiteral("expensive")
        assert negate_parameter(negate_parameter(cheap)) == cheap

    def test_not_set(self):
        assert [str(p) for p in not_set(["cheap", "expensive"])] == ["not cheap", "not expensive"]


class TestSubsetEquals:
    def test_pricing_subset(self, pricing):
        h, g = pricing
        assert is_subset(g, h)
        assert not is_subset(h, g)
        assert g <= h and h >= g

    def test_empty_subset(self, pricing):
        h, _ = pricing
        assert is_subset(EMPTY, h)
        assert is_subset(EMPTY, EMPTY)

    def test_raised_truth_breaks_subset(self, pricing):
        h, g = pricing
        k = key("e1", "p", 1)
        row = dict(g[k])
        row["u1"] = BNN(0.9, *row["u1"].as_tuple()[1:])
        bumped = SoftExpertSet({**dict(g), k: row})
        assert not is_subset(bumped, h)

    def test_each_component_direction(self):
        base = (0.5, 0.5, 0.5, -0.5, -0.5, -0.5)
        # moving g in the "smaller" direction for each component keeps it a subset
        down = [(-0.1, 0, 0, 0, 0, 0), (0, -0.1, 0, 0, 0, 0), (0, 0, 0.1, 0, 0, 0),
                (0, 0, 0, 0.1, 0, 0), (0, 0, 0, 0, 0.1, 0), (0, 0, 0, 0, 0, -0.1)]
        h = SoftExpertSet({("a", "x", 1): {"u": base}})
        for d in down:
            lo = tuple(b + x for b, x in zip(base, d))
            hi = tuple(b - x for b, x in zip(base, d))
            g_lo = SoftExpertSet({("a", "x", 1): {"u": lo}})
            g_hi = SoftExpertSet({("a", "x", 1): {"u": hi}})
            assert is_subset(g_lo, h) and not is_subset(h, g_lo)
            assert not is_subset(g_hi, h)

    def test_equals(self, pricing, notebooks):
        h, g = pricing
        assert equals(h, h)
        assert not equals(h, g)
        s = notebooks.set
        k = key("cheap", "p", 1)
        nudged = dict(s[k])
        v = nudged["u1"]
        nudged["u1"] = BNN(v.t_pos + 1e-12, *v.as_tuple()[1:])
        t = SoftExpertSet({**dict(s), k: nudged})
        assert t != s
        assert equals(t, s)
        assert not equals(t, s, tol=0)

    def test_subset_partial_order(self, rng):
        for _ in range(200):
            h = random_set(rng)
            assert is_subset(h, h)
            # chain h >= g >= f by monotone shrinking of every component
            def shrink(s):
                return SoftExpertSet({
                    k: {u: BNN(v.t_pos * 0.9, v.i_pos * 0.8, 1 - (1 - v.f_pos) * 0.9,
                               v.t_neg * 0.9, v.i_neg * 0.7, -1 + (1 + v.f_neg) * 0.8)
                        for u, v in row.items()}
                    for k, row in s.items()})
            g = shrink(h)
            f = shrink(g)
            assert is_subset(g, h) and is_subset(f, g) and is_subset(f, h)


class TestComplement:
    def test_value_swap(self):
        v = BNN(0.3, 0.5, 0.7, -0.2, -0.3, -0.4)
        assert complement_value(v).as_tuple() == (0.7, 0.5, 0.3, -0.4, -0.3, -0.2)

    def test_key_mapping(self, notebooks):
        c = complement(notebooks.set)
        k = key("cheap", "p", 1, negated=True)
        assert k in c
        assert c[k]["u1"].as_tuple() == (0.7, 0.5, 0.3, -0.4, -0.3, -0.2)
        assert all(k.parameter.negated for k in c)
        assert len(c.support()) == len(notebooks.set.support())
        opinions = sorted((k.parameter.name, k.expert, k.opinion) for k in c)
        assert opinions == sorted((k.parameter.name, k.expert, k.opinion) for k in notebooks.set)

    def test_not_cheap_agree_block(self, notebooks):
        # D6 reading: (not cheap, q, agree) carries the swapped (cheap, q, agree) values
        c = complement(notebooks.set)
        row = c[key("cheap", "q", 1, negated=True)]
        assert row["u2"].as_tuple() == (0.3, 0.2, 0.8, -0.5, -0.3, -0.1)

    def test_involution(self, notebooks):
        assert complement(complement(notebooks.set)) == notebooks.set
        assert ~~notebooks.set == notebooks.set

    @given(soft_sets())
    def test_involution_random(self, h):
        assert equals(complement(complement(h)), h)


class TestNull:
    def test_handbags(self):
        from bnses import load
        from helpers import FIXTURES
        printed = load(FIXTURES / "handbags_null.json").set
        agree = make_null([key("quality", "p", 1), key("quality", "q", 1)], ["u1", "u2"])
        disagree = make_null([key("quality", "p", 0), key("quality", "q", 0)], ["u3"])
        assert union(agree, disagree) == printed
        assert is_null(printed)

    def test_minimal(self):
        s = make_null([("a", "x", 1)], ["u"])
        assert list(s.records()) == [(key("a", "x", 1), "u", BNN.zero())]
        assert make_null([], ["u"]) == EMPTY

    def test_is_null(self, notebooks):
        assert is_null(EMPTY)
        assert not is_null(notebooks.set)
        s = SoftExpertSet({("a", "x", 1): {"u": (0, 0, 0.1, 0, 0, 0), "v": (0,) * 6}})
        assert not is_null(s)


class TestRestrict:
    def test_partition(self, notebooks):
        s = notebooks.set
        a, d = restrict_agree(s), restrict_disagree(s)
        assert len(a) == 6 and len(d) == 6
        assert all(k.opinion is Opinion.AGREE for k in a)
        assert all(k.opinion is Opinion.DISAGREE for k in d)
        assert a.support() | d.support() == s.support()
        assert not a.support() & d.support()

    def test_idempotent_and_empty(self, notebooks):
        a = restrict_agree(notebooks.set)
        assert restrict_agree(a) == a
        assert restrict_disagree(a) == EMPTY
        assert restrict_agree(restrict_disagree(notebooks.set)) == EMPTY

    @given(soft_sets())
    def test_partition_random(self, h):
        a, d = restrict_agree(h).support(), restrict_disagree(h).support()
        assert a | d == h.support() and not a & d


class TestUnionIntersection:
    def test_union_example(self, merge_operands):
        h, g = merge_operands
        r = union(h, g)
        k = key("e1", "p", 1)
        assert close(r[k]["u1"], (0.2, 0.55, 0.2, -0.4, -0.2, -0.4))
        assert r[k]["u2"] == g[k]["u2"]
        assert r[k]["u3"] == h[k]["u3"]
        # (e1, q, 1) only in h: copied unchanged
        assert r[key("e1", "q", 1)] == h[key("e1", "q", 1)]

    def test_intersection_example(self, merge_operands):
        h, g = merge_operands
        r = intersection(h, g)
        assert list(r) == [key("e1", "p", 1)]
        assert list(r[key("e1", "p", 1)]) == ["u1"]
        assert close(r[key("e1", "p", 1)]["u1"], (0.1, 0.55, 0.8, -0.3, -0.2, -0.5))

    def test_idempotent(self, notebooks):
        s = notebooks.set
        assert equals(union(s, s), s)
        assert equals(intersection(s, s), s)

    def test_disjoint_intersection(self, notebooks):
        assert intersection(restrict_agree(notebooks.set),
                            restrict_disagree(notebooks.set)) == EMPTY

    @given(soft_sets(), soft_sets())
    def test_commutative(self, h, g):
        assert equals(union(h, g), union(g, h))
        assert equals(intersection(h, g), intersection(g, h))

    @given(soft_sets())
    def test_empty_laws(self, h):
        assert equals(union(h, EMPTY), h)
        assert equals(intersection(h, EMPTY), EMPTY)

    @given(values, values)
    def test_de_morgan(self, v, w):
        left = complement_value(union_value(v, w))
        right = intersection_value(complement_value(v), complement_value(w))
        assert close(left, right)

    def test_union_not_associative(self):
        a = BNN(0.5, 0.0, 0.5, -0.5, -0.5, -0.5)
        b = BNN(0.5, 0.0, 0.5, -0.5, -0.5, -0.5)
        c = BNN(0.5, 1.0, 0.5, -0.5, -0.5, -0.5)
        # I+ is halved at each nesting level: ((0,0),1) -> 0.5, (0,(0,1)) -> 0.25
        assert union_value(union_value(a, b), c).i_pos == 0.5
        assert union_value(a, union_value(b, c)).i_pos == 0.25

    def test_zero_valued_null_breaks_union_identity(self, merge_operands):
        # an all-zero set on the same support is not a union identity
        h, _ = merge_operands
        zero = make_null(list(h), ["u1", "u2", "u3"])
        assert not equals(union(h, zero), h)
