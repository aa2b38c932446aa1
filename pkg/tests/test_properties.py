# Copyright (C) 2026 The springerk developers
#
# This file is part of springerk.
#
# springerk is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# springerk is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with springerk.  If not, see <http://www.gnu.org/licenses/>.
#
# SPDX-License-Identifier: GPL-2.0+

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from springerk import constructibility, jdt, meanders, membership, tableaux
from springerk.diagrams import YoungDiagram, classify


@st.composite
def hook_shapes(draw, max_boxes=7):
    arm = draw(st.integers(min_value=1, max_value=max_boxes))
    leg = draw(st.integers(min_value=0, max_value=max_boxes - arm))
    return YoungDiagram((arm,) + (1,) * leg)


@st.composite
def two_row_shapes(draw, max_boxes=8):
    second = draw(st.integers(min_value=1, max_value=max_boxes // 2))
    first = draw(st.integers(min_value=second, max_value=max_boxes - second))
    return YoungDiagram((first, second))


@st.composite
def two_column_shapes(draw, max_boxes=7):
    pairs = draw(st.integers(min_value=1, max_value=max_boxes // 2))
    singles = draw(st.integers(min_value=0, max_value=max_boxes - 2 * pairs))
    return YoungDiagram((2,) * pairs + (1,) * singles)


family_shapes = st.one_of(hook_shapes(), two_row_shapes(), two_column_shapes())

thorough = settings(max_examples=1000, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def standard_tableaux(draw, shapes=family_shapes):
    shape = draw(shapes)
    return draw(st.sampled_from(list(tableaux.iter_standard(shape))))


@st.composite
def row_standard_tableaux(draw, shapes=family_shapes):
    shape = draw(shapes)
    entries = draw(st.permutations(list(range(1, shape.n + 1))))
    rows, start = [], 0
    for length in shape.rows:
        rows.append(sorted(entries[start:start + length]))
        start += length
    return tableaux.RowStandardTableau(rows)


@thorough
@given(row_standard_tableaux())
def test_s_dual_is_an_involution(tau):
    assert tableaux.s_dual(tableaux.s_dual(tau)) == tau


@thorough
@given(row_standard_tableaux())
def test_standardize_keeps_columns_and_is_idempotent(tau):
    t = tableaux.standardize(tau)
    assert t.shape == tau.shape
    assert [sorted(col) for col in t.columns] == [sorted(col) for col in tau.columns]
    assert tableaux.standardize(t) == t


@thorough
@given(row_standard_tableaux())
def test_standardization_is_a_member(tau):
    assert membership.member(tau, tableaux.standardize(tau)).member


@thorough
@given(standard_tableaux())
def test_schuetzenberger_is_an_involution(t):
    assert jdt.schuetzenberger(jdt.schuetzenberger(t)) == t


@thorough
@given(standard_tableaux(), st.data())
def test_rectify_shape_independent_of_slide_order(t, data):
    i = data.draw(st.integers(min_value=0, max_value=t.n - 1))
    j = data.draw(st.integers(min_value=i + 1, max_value=t.n))
    s = jdt.skew_subtableau(t, i, j)
    assert jdt.rectify(s, 'lowest').shape == jdt.rectify(s, 'highest').shape


@thorough
@given(standard_tableaux(two_row_shapes()))
def test_cup_arcs_do_not_cross(t):
    arcs = meanders.cup_diagram(t).arcs
    for (a, b) in arcs:
        assert a < b
        for (c, d) in arcs:
            assert not a < c < b < d


@thorough
@given(two_row_shapes(), st.data())
def test_meander_loops_have_even_length(shape, data):
    standard = list(tableaux.iter_standard(shape))
    t = data.draw(st.sampled_from(standard))
    s = data.draw(st.sampled_from(standard))
    m = meanders.meander(t, s)
    assert all(c.length % 2 == 0 for c in meanders.loops(m))
    points = sorted(x for c in m.components for x in c.points)
    assert points == list(range(1, shape.n + 1))


@pytest.mark.parametrize('shapes', [hook_shapes(), two_row_shapes(), two_column_shapes()],
                         ids=['hook', 'two_row', 'two_column'])
@thorough
@given(data=st.data())
def test_criteria_agree_with_dominance(shapes, data):
    tau = data.draw(row_standard_tableaux(shapes))
    t = data.draw(st.sampled_from(list(tableaux.iter_standard(tau.shape))))
    expected = membership.dominance_member(tau, t).member
    assert constructibility.constructible(tau, t).member == expected
    assert membership.inductive_member(tau, t).member == expected


@thorough
@given(family_shapes)
def test_generated_shapes_are_in_a_family(shape):
    assert not classify(shape).general
