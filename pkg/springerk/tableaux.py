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

'''Row-standard and standard tableaux.

Entries are 1-based, box positions (row, column) are 0-based. The wire
format joins the entries of a row with "," and the rows, top to bottom,
with "/", e.g. "3,4,8/1,6,7/2,5".
'''

from itertools import combinations
import re

from .diagrams import YoungDiagram


class RowStandardTableau(object):

    __slots__ = ('rows', '_positions')

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        if any(not row for row in rows):
            raise ValueError('empty row in {!r}'.format(rows))
        for row in rows:
            if any(a >= b for (a, b) in zip(row, row[1:])):
                raise ValueError('row not increasing: {}'.format(_wire(rows)))
        if any(len(a) < len(b) for (a, b) in zip(rows, rows[1:])):
            raise ValueError('row lengths not weakly decreasing: {}'.format(_wire(rows)))
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError('entries are not a permutation of 1..n: {}'.format(_wire(rows)))
        self.rows = rows
        self._positions = None

    @property
    def shape(self):
        return YoungDiagram(len(row) for row in self.rows)

    @property
    def n(self):
        return sum(len(row) for row in self.rows)

    @property
    def columns(self):
        if not self.rows:
            return ()
        return tuple(tuple(row[c] for row in self.rows if len(row) > c)
                     for c in range(len(self.rows[0])))

    def positions(self):
        if self._positions is None:
            self._positions = {x: (r, c)
                               for (r, row) in enumerate(self.rows)
                               for (c, x) in enumerate(row)}
        return self._positions

    def __hash__(self):
        return hash(self.rows)

    def __eq__(self, other):
        return isinstance(other, RowStandardTableau) and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.rows < other.rows

    def __repr__(self):
        return '{}({!r})'.format(type(self).__name__, str(self))

    def __str__(self):
        return _wire(self.rows)


class StandardTableau(RowStandardTableau):

    __slots__ = ()

    def __init__(self, rows):
        super(StandardTableau, self).__init__(rows)
        for col in self.columns:
            if any(a >= b for (a, b) in zip(col, col[1:])):
                raise ValueError('column not increasing: {}'.format(self))


def _wire(rows):
    return '/'.join(','.join(str(x) for x in row) for row in rows)


def _parse_rows(text):
    stripped = re.sub(r'\s+', '', text or '')
    if not stripped:
        raise ValueError('empty tableau')
    try:
        return [[int(x) for x in row.split(',')] for row in stripped.split('/')]
    except ValueError:
        raise ValueError('malformed tableau {!r}'.format(text))


def parse_tableau(text):
    '''Parse the wire format into a validated RowStandardTableau.'''
    return RowStandardTableau(_parse_rows(text))


def parse_standard(text):
    return StandardTableau(_parse_rows(text))


def is_standard(t):
    return all(a < b for col in t.columns for (a, b) in zip(col, col[1:]))


def as_standard(t):
    '''Return t as a StandardTableau, or raise ValueError if it is not one.'''
    if isinstance(t, StandardTableau):
        return t
    if not is_standard(t):
        raise ValueError('not a standard tableau: {}'.format(t))
    return StandardTableau(t.rows)


def position(t, i):
    try:
        return t.positions()[i]
    except KeyError:
        raise ValueError('entry {} not in tableau {}'.format(i, t))


def row_of(t, i):
    return position(t, i)[0]


def column_of(t, i):
    return position(t, i)[1]


def _from_columns(columns):
    height = max(len(col) for col in columns) if columns else 0
    return [[col[r] for col in columns if len(col) > r] for r in range(height)]


def standardize(t):
    return StandardTableau(_from_columns([sorted(col) for col in t.columns]))


def s_dual(t):
    '''Replace each entry i by n - i + 1 and reverse every row.'''
    n = t.n
    return RowStandardTableau([n + 1 - x for x in reversed(row)] for row in t.rows)


def transpose_tableau(t):
    t = as_standard(t)
    return StandardTableau(t.columns)


def _row_partition(t, m):
    return frozenset(frozenset(x for x in row if x <= m) for row in t.rows
                     if row[0] <= m)


def contains_subtableau(t, t2):
    '''True if t2 is a subtableau of t: entries 1..|t2| are grouped into rows
    the same way in both.'''
    m = t2.n
    if m > t.n:
        raise ValueError('subtableau larger than tableau: {} and {}'.format(t2, t))
    return _row_partition(t, m) == _row_partition(t2, m)


def row_equivalent(t, t2):
    if t.shape != t2.shape:
        raise ValueError('shape mismatch: {} and {}'.format(t, t2))
    return sorted(t.rows) == sorted(t2.rows)


def _relabelled(t, keep, offset):
    rows = [[x - offset for x in row if keep(x)] for row in t.rows]
    rows = sorted((row for row in rows if row), key=len, reverse=True)
    result = RowStandardTableau(rows)
    if isinstance(t, StandardTableau) and is_standard(result):
        return StandardTableau(result.rows)
    return result


def restrict(t, i):
    '''The subtableau t[1..i], rows reordered by decreasing length.'''
    if not 0 <= i <= t.n:
        raise ValueError('index out of range: {}'.format(i))
    return _relabelled(t, lambda x: x <= i, 0)


def shift(t, i):
    '''The tableau t[i+1..n] with every entry lowered by i.

    Each row is left-justified; for a standard t this is only standard when
    t[1..i] is a straight shape whose removal keeps the columns aligned.
    '''
    if not 0 <= i <= t.n:
        raise ValueError('index out of range: {}'.format(i))
    return _relabelled(t, lambda x: x > i, i)


def swap_entries(t, a, b):
    swap = {a: b, b: a}
    return RowStandardTableau(sorted(swap.get(x, x) for x in row) for row in t.rows)


def swap_rows(t):
    if len(t.rows) != 2 or len(t.rows[0]) != len(t.rows[1]):
        raise ValueError('rows cannot be swapped: {}'.format(t))
    return RowStandardTableau((t.rows[1], t.rows[0]))


def prefix_shape(t, i):
    '''Shape of the entries 1..i of t, row counts sorted decreasingly.'''
    counts = (sum(1 for x in row if x <= i) for row in t.rows)
    return YoungDiagram(sorted((c for c in counts if c), reverse=True))


def prefix_shapes(t):
    t = as_standard(t)
    return [prefix_shape(t, i) for i in range(1, t.n + 1)]


def iter_standard(shape):
    '''Yield every standard tableau of the given shape.'''
    n = shape.n
    if n == 0:
        yield StandardTableau(())
        return
    lengths = list(shape.rows)
    for r in range(len(lengths)):
        # n goes in a removable corner
        if r + 1 < len(lengths) and lengths[r + 1] == lengths[r]:
            continue
        smaller = lengths[:r] + [lengths[r] - 1] + lengths[r + 1:]
        for sub in iter_standard(YoungDiagram(x for x in smaller if x)):
            rows = [list(row) for row in sub.rows]
            if r == len(rows):
                rows.append([])
            rows[r].append(n)
            yield StandardTableau(rows)


def iter_row_standard(shape):
    '''Yield every row-standard tableau of the given shape.'''
    def fill(remaining, lengths):
        if not lengths:
            yield ()
            return
        for chosen in combinations(remaining, lengths[0]):
            rest = [x for x in remaining if x not in chosen]
            for tail in fill(rest, lengths[1:]):
                yield (chosen,) + tail
    for rows in fill(list(range(1, shape.n + 1)), shape.rows):
        yield RowStandardTableau(rows)
