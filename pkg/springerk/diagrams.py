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

'''Young diagrams, the dominance order and shape families.'''

from collections import namedtuple
from itertools import accumulate, zip_longest

from . import util


FAMILIES = ('hook', 'two_row', 'two_column')


class ShapeFamily(namedtuple('ShapeFamily', FAMILIES)):

    __slots__ = ()

    @property
    def general(self):
        return not any(self)

    def names(self):
        '''Names of the families this shape belongs to, in FAMILIES order.'''
        return tuple(name for name, flag in zip(FAMILIES, self) if flag)


class YoungDiagram(object):
    '''A Young diagram stored as its weakly decreasing row lengths.

    The empty diagram (no rows, n = 0) is allowed.
    '''

    __slots__ = ('rows',)

    def __init__(self, rows):
        rows = tuple(rows)
        if any(not isinstance(x, int) or x < 1 for x in rows):
            raise ValueError('row lengths must be positive integers: {!r}'.format(rows))
        if any(a < b for (a, b) in zip(rows, rows[1:])):
            raise ValueError('row lengths not weakly decreasing: {!r}'.format(rows))
        self.rows = rows

    @property
    def n(self):
        return sum(self.rows)

    @property
    def columns(self):
        if not self.rows:
            return ()
        return tuple(sum(1 for x in self.rows if x > c) for c in range(self.rows[0]))

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, index):
        return self.rows[index]

    def __hash__(self):
        return hash(self.rows)

    def __eq__(self, other):
        return isinstance(other, YoungDiagram) and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.rows < other.rows

    def __repr__(self):
        return 'YoungDiagram({!r})'.format(self.rows)

    def __str__(self):
        return ','.join(str(x) for x in self.rows)

    def contains(self, other):
        '''True if other fits inside self row by row.'''
        return (len(other) <= len(self) and
                all(a <= b for (a, b) in zip(other.rows, self.rows)))

    def cells(self):
        for (r, length) in enumerate(self.rows):
            for c in range(length):
                yield (r, c)


def parse_shape(text):
    '''Parse "5,4" into YoungDiagram((5, 4)).'''
    return YoungDiagram(util.parse_int_list(text))


def dominates(y, y2):
    '''Return True if y is dominated by y2 (y <= y2 in the dominance order).'''
    if y.n != y2.n:
        raise ValueError('incomparable sizes: {} and {}'.format(y, y2))
    prefix = accumulate(a for (a, _) in zip_longest(y.rows, y2.rows, fillvalue=0))
    prefix2 = accumulate(b for (_, b) in zip_longest(y.rows, y2.rows, fillvalue=0))
    return all(a <= b for (a, b) in zip(prefix, prefix2))


def strictly_dominates(y, y2):
    return y != y2 and dominates(y, y2)


def transpose(y):
    return YoungDiagram(y.columns)


def classify(y):
    return ShapeFamily(
        hook=sum(1 for x in y.rows if x >= 2) <= 1,
        two_row=len(y) <= 2,
        two_column=not y.rows or y.rows[0] <= 2,
        )


def springer_dim(y):
    return sum(c * (c - 1) // 2 for c in y.columns)


def partitions(n):
    '''All Young diagrams with n boxes, in reverse lexicographic order.'''
    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest
    for rows in gen(n, n):
        yield YoungDiagram(rows)
