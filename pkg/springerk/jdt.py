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

'''Skew tableaux, jeu de taquin and the quotient shapes of a tableau.'''

from functools import lru_cache

from .diagrams import YoungDiagram
from . import tableaux


SLIDE_ORDERS = ('lowest', 'highest')


class SkewTableau(object):
    '''Entries in the boxes of outer minus inner, increasing along rows and
    down columns. cells maps (row, column) to the entry.'''

    __slots__ = ('outer', 'inner', 'cells')

    def __init__(self, outer, inner, cells):
        if not outer.contains(inner):
            raise ValueError('inner shape {} does not fit in {}'.format(inner, outer))
        boxes = set(outer.cells()) - set(inner.cells())
        if set(cells) != boxes:
            raise ValueError('cells do not fill {} / {}'.format(outer, inner))
        if len(set(cells.values())) != len(cells):
            raise ValueError('repeated entries in skew tableau')
        for ((r, c), x) in cells.items():
            right = cells.get((r, c + 1))
            below = cells.get((r + 1, c))
            if (right is not None and right <= x) or (below is not None and below <= x):
                raise ValueError('skew tableau not increasing at {}'.format((r, c)))
        self.outer = outer
        self.inner = inner
        self.cells = dict(cells)

    @property
    def shape(self):
        return self.outer

    @property
    def rows(self):
        '''Entries row by row; only meaningful for a straight tableau.'''
        inner = self.inner.rows + (0,) * (len(self.outer) - len(self.inner))
        return tuple(tuple(self.cells[(r, c)] for c in range(inner[r], length))
                     for (r, length) in enumerate(self.outer.rows))

    def is_straight(self):
        return self.inner.n == 0

    def entries(self):
        return sorted(self.cells.values())

    def __eq__(self, other):
        return (isinstance(other, SkewTableau) and self.outer == other.outer and
                self.inner == other.inner and self.cells == other.cells)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'SkewTableau({}, {}, {!r})'.format(self.outer, self.inner, sorted(self.cells.items()))


def _check_range(t, i, j):
    if not 0 <= i < j <= t.n:
        raise ValueError('index out of range: i={}, j={}, n={}'.format(i, j, t.n))


def skew_subtableau(t, i, j):
    '''The skew tableau t[i+1..j] of a standard tableau t.'''
    t = tableaux.as_standard(t)
    _check_range(t, i, j)
    positions = t.positions()
    inner = tableaux.prefix_shape(t, i)
    cells = {positions[x]: x for x in range(i + 1, j + 1)}
    return SkewTableau(tableaux.prefix_shape(t, j), inner, cells)


def _inner_corner(inner, order):
    corners = [r for r in range(len(inner))
               if r + 1 == len(inner) or inner[r + 1] < inner[r]]
    return corners[-1] if order == 'lowest' else corners[0]


def rectify(s, order='lowest'):
    '''Rectify s by jeu de taquin slides into inner corners.

    order='lowest' always slides into the inner corner of largest row index,
    order='highest' into the one of smallest row index. The resulting shape
    does not depend on the order.
    '''
    if order not in SLIDE_ORDERS:
        raise ValueError('unknown slide order {!r}'.format(order))
    outer = list(s.outer.rows)
    inner = list(s.inner.rows)
    cells = dict(s.cells)
    while inner:
        r = _inner_corner(inner, order)
        c = inner[r] - 1
        inner[r] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
        while True:
            right = cells.get((r, c + 1))
            below = cells.get((r + 1, c))
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                cells[(r, c)] = cells.pop((r, c + 1))
                c += 1
            else:
                cells[(r, c)] = cells.pop((r + 1, c))
                r += 1
        outer[r] -= 1
        while outer and outer[-1] == 0:
            outer.pop()
    return SkewTableau(YoungDiagram(outer), YoungDiagram(()), cells)


@lru_cache(maxsize=65536)
def quotient_shape_T(t, i, j):
    '''Shape of the rectification of t[i+1..j].'''
    return rectify(skew_subtableau(t, i, j)).shape


def quotient_shape_tau(t, i, j):
    '''Row counts of the entries i+1..j of t, sorted decreasingly.'''
    _check_range(t, i, j)
    counts = (sum(1 for x in row if i < x <= j) for row in t.rows)
    return YoungDiagram(sorted((c for c in counts if c), reverse=True))


def schuetzenberger(t):
    '''The Schuetzenberger transform: entry k sits in the box that the shape
    of the rectified t[n-k+1..n] adds to that of t[n-k+2..n].'''
    t = tableaux.as_standard(t)
    n = t.n
    rows = [[] for _ in t.rows]
    previous = ()
    for k in range(1, n + 1):
        current = quotient_shape_T(t, n - k, n).rows
        grown = [r for r in range(len(current))
                 if r >= len(previous) or current[r] > previous[r]]
        assert len(grown) == 1, 'quotient shapes do not grow by one box'
        rows[grown[0]].append(k)
        previous = current
    return tableaux.StandardTableau(rows)
