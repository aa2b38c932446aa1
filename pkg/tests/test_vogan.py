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

from springerk import tableaux, vogan
from springerk.diagrams import YoungDiagram

from .helpers import tab

Q = '1,2,4,5,7/3,6,8,9'
T = '1,2,4,6,7/3,5,8,9'
S = '1,2,5,6,7/3,4,8,9'
R = '1,2,3,4,7/5,6,8,9'


def test_descents_typical_cases():
    assert vogan.descents(tab('1,2/3')) == {2}
    assert vogan.descents(tab('1,3/2')) == {1}
    assert vogan.descents(tab('1,2,3,4')) == set()


def test_vogan_t_ab_forward():
    assert vogan.vogan_t_ab(tab(Q), 4, True) == tab(T)


def test_vogan_t_ab_backward_inverts_forward():
    for t in tableaux.iter_standard(YoungDiagram((4, 3))):
        for i in range(1, t.n - 1):
            if vogan.in_ab_domain(t, i, True):
                u = vogan.vogan_t_ab(t, i, True)
                assert vogan.in_ab_domain(u, i, False)
                assert vogan.vogan_t_ab(u, i, False) == t
                assert u.shape == t.shape


def test_vogan_t_ab_domain_violation():
    with raises(ValueError):
        vogan.vogan_t_ab(tab(T), 2, True)


def test_vogan_t_ab_backward_domain_violation():
    with raises(ValueError) as excinfo:
        vogan.vogan_t_ab(tab(Q), 4, False)
    assert 'backward domain' in str(excinfo.value)


def test_swap_that_breaks_a_column_raises():
    with raises(ValueError) as excinfo:
        vogan._swapped(tab('1,3/2,4'), 3, 4)
    assert 'breaks a column' in str(excinfo.value)


def test_vogan_t_ab_always_returns_standard_tableaux():
    for shape in [(3, 3), (2, 2, 1), (2, 2, 2), (3, 1, 1)]:
        for t in tableaux.iter_standard(YoungDiagram(shape)):
            for i in range(1, t.n - 1):
                for forward in (True, False):
                    if vogan.in_ab_domain(t, i, forward):
                        u = vogan.vogan_t_ab(t, i, forward)
                        assert isinstance(u, tableaux.StandardTableau)
                        assert u.shape == t.shape


def test_vogan_t_i_typical_cases():
    assert vogan.vogan_t_i(tab(T), 4) == tab(S)
    assert vogan.vogan_t_i(tab(Q), 3) == tab('1,2,3,5,7/4,6,8,9')


def test_vogan_t_i_same_row():
    with raises(ValueError):
        vogan.vogan_t_i(tab(T), 1)
    with raises(ValueError):
        vogan.vogan_t_i(tab('1,2,3/4'), 2)


def test_vogan_set_contains_known_pairs():
    pairs = vogan.pair_set((p.first, p.second) for p in vogan.vogan_set(YoungDiagram((5, 4))))
    assert frozenset((tab(T), tab(S))) in pairs
    assert frozenset((tab(T), tab(R))) in pairs
    assert frozenset((tab(S), tab(R))) not in pairs


def test_vogan_set_single_row_is_empty():
    assert vogan.vogan_set(YoungDiagram((5,))) == []


def test_vogan_set_provenance_replays():
    for pair in vogan.vogan_set(YoungDiagram((4, 3))):
        assert set(vogan.replay(pair)) == {pair.first, pair.second}


def test_hook_vogan_set():
    pairs = vogan.hook_vogan_set(YoungDiagram((3, 1, 1)))
    assert pairs
    for pair in pairs:
        assert pair.provenance[0][0] == 'seed'
    with raises(ValueError):
        vogan.hook_vogan_set(YoungDiagram((2, 2)))
