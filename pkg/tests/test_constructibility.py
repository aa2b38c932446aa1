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

from pytest import raises

from springerk import constructibility, membership, render, tableaux
from springerk.constructibility import Outcome
from springerk.diagrams import YoungDiagram
from springerk.tableaux import parse_tableau

from .helpers import tab

ROW_T = '1,2,3,4,7/5,6,8,9'


def test_construct_two_row_fails_at_step_five():
    trace = constructibility.construct_two_row(parse_tableau('2,3,6,8,9/1,4,5,7'), tab(ROW_T))
    assert trace.outcome == Outcome(False, 5, 'last-column occupied')
    assert len(trace.steps) == 4


def test_construct_two_row_succeeds():
    tau = parse_tableau('1,4,6,8,9/2,3,5,7')
    trace = constructibility.construct_two_row(tau, tab(ROW_T))
    assert trace.outcome == constructibility.SUCCESS
    assert trace.steps[4][0][:4] == (1, 4, None, None)
    assert trace.steps[4][1][:4] == (2, None, 3, 5)
    assert trace.steps[5][1][:4] == (2, 3, None, 5)
    assert trace.steps[-1][0][:5] == (1, 4, 6, 8, 9)
    assert trace.steps[-1][1][:5] == (2, 3, 5, 7, None)


def test_construct_two_row_small_pairs():
    trace = constructibility.construct_two_row(tab('1,2/3,4'), tab('1,3/2,4'))
    assert trace.outcome == Outcome(False, 2, 'last-column occupied')
    trace = constructibility.construct_two_row(tab('1,3/2,4'), tab('1,2/3,4'))
    assert trace.outcome.success


def test_construct_two_col_succeeds_with_zero_indices():
    trace = constructibility.construct_two_col(parse_tableau('3,5/1,4/2'), tab('1,2/3,4/5'))
    assert trace.outcome.success
    assert trace.aux[-1] == (0, 0, 0)
    assert trace.steps[-1] == ((3, 5), (1, 4), (2, None))


def test_construct_two_col_fails_second_kind():
    trace = constructibility.construct_two_col(parse_tableau('2,6/3,5/4/1'), tab('1,2/3,4/5/6'))
    assert trace.outcome == Outcome(False, 6, 'second')


def test_construct_two_col_standardization_rebuilds_prefixes():
    for tau in tableaux.iter_row_standard(YoungDiagram((2, 2, 1))):
        trace = constructibility.construct_two_col(tau, tableaux.standardize(tau))
        assert trace.outcome.success
        for (k, grid) in enumerate(trace.steps, 1):
            placed = [tuple(x if x is not None and x <= k else None for x in row)
                      for row in trace.steps[-1]]
            assert list(grid) == placed


def test_construct_hook_fails_first_kind():
    trace = constructibility.construct_hook(parse_tableau('2,4,5/3/1'), tab('1,3,4/2/5'))
    assert trace.outcome == Outcome(False, 4, 'first')


def test_construct_hook_fails_second_kind():
    trace = constructibility.construct_hook(parse_tableau('1,3,4/5/2'), tab('1,2,5/3/4'))
    assert trace.outcome == Outcome(False, 4, 'second')


def test_construct_hook_succeeds():
    trace = constructibility.construct_hook(parse_tableau('2,3,5/4/1'), tab('1,3,4/2/5'))
    assert trace.outcome.success
    assert trace.aux == (True, True, True, False, True)


def test_construct_hook_fails_column_count():
    # 2 joins the first row of T while the first row of tau is still empty
    trace = constructibility.construct_hook(parse_tableau('2,3/1'), tab('1,2/3'))
    assert trace.outcome == Outcome(False, 2, 'column count')
    assert trace.steps == (((None, None, None), (1, None, None)),)
    verdict = constructibility.constructible(parse_tableau('2,3/1'), tab('1,2/3'))
    assert verdict.witness == (2, 'column count')


def test_construct_hook_never_trips_on_small_hooks():
    for shape in [(2, 1), (3, 1), (2, 1, 1), (4, 1), (3, 1, 1), (2, 1, 1, 1)]:
        y = YoungDiagram(shape)
        standard = list(tableaux.iter_standard(y))
        for tau in tableaux.iter_row_standard(y):
            for t in standard:
                trace = constructibility.construct_hook(tau, t)
                assert trace.outcome.success == membership.dominance_member(tau, t).member


def test_construct_dispatch_and_family_override():
    tau, t = parse_tableau('1,3/2,4'), tab('1,2/3,4')
    assert constructibility.construct(tau, t).family == 'two_row'
    assert constructibility.construct(tau, t, 'two_column').family == 'two_column'
    with raises(ValueError):
        constructibility.construct(tau, t, 'hook')


def test_constructible_matches_dominance():
    for shape in [(3, 1, 1), (3, 2), (2, 2, 1), (2, 2), (4, 1)]:
        y = YoungDiagram(shape)
        standard = list(tableaux.iter_standard(y))
        for tau in tableaux.iter_row_standard(y):
            for t in standard:
                assert (constructibility.constructible(tau, t).member ==
                        membership.dominance_member(tau, t).member)


def test_constructible_witness():
    verdict = constructibility.constructible(parse_tableau('2,4,5/3/1'), tab('1,3,4/2/5'))
    assert verdict == membership.MembershipVerdict(False, 'constructible', (4, 'first'))


def test_lemma_strip_check_on_two_row_traces():
    y = YoungDiagram((3, 3))
    for tau in tableaux.iter_row_standard(y):
        for t in tableaux.iter_standard(y):
            assert constructibility.lemma_strip_check(constructibility.construct_two_row(tau, t))


def test_lemma_strip_check_rejects_hook_traces():
    trace = constructibility.construct_hook(parse_tableau('2,3,5/4/1'), tab('1,3,4/2/5'))
    with raises(ValueError):
        constructibility.lemma_strip_check(trace)


def test_strips():
    assert constructibility.strips((None, 2, 3, None, 5)) == [(1, 2), (4, 4)]
    assert constructibility.strips((None, None)) == []


def test_render_trace_hook():
    trace = constructibility.construct_hook(parse_tableau('2,4,5/3/1'), tab('1,3,4/2/5'))
    text = render.render_trace(trace)
    assert text.startswith('hook construction of 2,4,5/3/1 from 1,3,4/2/5\n')
    assert 'equals tau[1..3]: false' in text
    assert text.endswith('fails at step 4 (first)\n')


def test_render_trace_two_column_shows_indices():
    trace = constructibility.construct_two_col(parse_tableau('3,5/1,4/2'), tab('1,2/3,4/5'))
    text = render.render_trace(trace)
    assert 'theta_5:\n 3 5   f= 0\n 1 4   f= 0\n 2 .   f= 0\n' in text
    assert text.endswith('constructible\n')
