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

'''The insertion algorithms that rebuild tau from T one entry at a time.

Each algorithm works on a fixed grid of boxes (2 x n for two-row shapes,
r x 2 for two-column shapes, r x (s+1) for hooks) and returns a
ConstructionTrace holding every intermediate grid. The pair is
constructible when no failure case is hit; on success the last grid is tau.
'''

from collections import namedtuple

from .diagrams import classify
from .membership import MembershipVerdict, applicable_families, common_shape
from . import tableaux
from .util import ConsistencyError, INFINITY


FAILURE_KINDS = ('last-column occupied', 'first', 'second', 'column count')

Outcome = namedtuple('Outcome', ['success', 'step', 'kind'])

ConstructionTrace = namedtuple('ConstructionTrace',
                               ['family', 'tau', 't', 'steps', 'aux', 'outcome'])

SUCCESS = Outcome(True, None, None)


def _require_family(tau, t, family):
    t = common_shape(tau, t)
    if not getattr(classify(t.shape), family):
        raise ValueError('shape {} is not {}'.format(t.shape, family.replace('_', '-')))
    return t


def _freeze(grid):
    return tuple(tuple(row) for row in grid)


def _placed(tau, k, height, width):
    '''tau[1..k] as a partial numbering of a height x width grid.'''
    grid = [[None] * width for _ in range(height)]
    for (x, (r, c)) in tau.positions().items():
        if x <= k:
            grid[r][c] = x
    return grid


def _column_counts(grid, width):
    return [sum(1 for row in grid if row[c] is not None) for c in range(width)]


def _t_column_counts(t, i, width):
    counts = [0] * width
    for (x, (_, c)) in t.positions().items():
        if x <= i and c < width:
            counts[c] += 1
    return counts


def _rows_within_tau(grid, tau):
    for (p, row) in enumerate(grid):
        entries = [x for x in row if x is not None]
        if p >= len(tau.rows) and entries:
            return False
        if any(tableaux.row_of(tau, x) != p for x in entries):
            return False
    return True


def _increasing(row):
    entries = [x for x in row if x is not None]
    return all(a < b for (a, b) in zip(entries, entries[1:]))


def _finish(family, tau, t, steps, aux, outcome):
    if outcome.success:
        width = len(steps[-1][0]) if steps else 0
        assert _freeze(_placed(tau, t.n, len(steps[-1]), width)) == steps[-1], \
            'final grid differs from tau'
    return ConstructionTrace(family, tau, t, tuple(steps), tuple(aux), outcome)


##############
# Two-row case
##############

def strips(row):
    '''Maximal runs of filled boxes in a grid row, as (start, end) pairs.'''
    runs = []
    start = None
    for (c, x) in enumerate(row):
        if x is not None and start is None:
            start = c
        elif x is None and start is not None:
            runs.append((start, c - 1))
            start = None
    if start is not None:
        runs.append((start, len(row) - 1))
    return runs


def _push_strips(grid):
    for row in grid:
        runs = strips(row)
        for (k, (start, _)) in reversed(list(enumerate(runs))):
            if start == 0:
                continue
            target = runs[k - 1][1] + 1 if k else 0
            row[target] = row[start]
            row[start] = None


def _check_two_row(grid, tau, t, i):
    assert all(_increasing(row) for row in grid), '(2r-a): row not increasing'
    assert _rows_within_tau(grid, tau), '(2r-a): entry outside its tau row'
    width = len(grid[0])
    assert _column_counts(grid, width) == _t_column_counts(t, i, width), \
        '(2r-b): column counts differ from T'


def construct_two_row(tau, t):
    t = _require_family(tau, t, 'two_row')
    n = t.n
    grid = [[None] * n for _ in range(2)]
    ncols = 0
    steps, aux = [], []
    outcome = SUCCESS
    for i in range(1, n + 1):
        p = tableaux.row_of(tau, i)
        if tableaux.row_of(t, i) == 0:
            grid[p][ncols] = i
            ncols += 1
        else:
            if grid[p][ncols - 1] is not None:
                outcome = Outcome(False, i, 'last-column occupied')
                break
            runs = strips(grid[p])
            grid[p][runs[-1][1] + 1 if runs else 0] = i
            _push_strips(grid)
        _check_two_row(grid, tau, t, i)
        steps.append(_freeze(grid))
        aux.append(tuple(tuple(strips(row)) for row in grid))
    return _finish('two_row', tau, t, steps, aux, outcome)


def _leading_strips(grid):
    lengths = []
    for row in grid:
        runs = strips(row)
        lengths.append(runs[0][1] + 1 if runs and runs[0][0] == 0 else 0)
    return tuple(lengths)


def _is_rectangular(grid):
    s1, s2 = _leading_strips(grid)
    filled = sum(1 for row in grid for x in row if x is not None)
    return s1 == s2 and filled == s1 + s2


def lemma_strip_check(trace):
    '''Along a two-row trace, whenever the first strip is shorter than the
    second at one step and longer at another, some step in between has a
    rectangular grid.'''
    if trace.family != 'two_row':
        raise ValueError('strip lemma applies to two-row traces only')
    diffs = [s1 - s2 for (s1, s2) in (_leading_strips(g) for g in trace.steps)]
    for a in range(len(diffs)):
        for b in range(a + 1, len(diffs)):
            if diffs[a] * diffs[b] < 0:
                if not any(_is_rectangular(trace.steps[k]) for k in range(a + 1, b)):
                    return False
    return True


#################
# Two-column case
#################

def _omega(tau, x):
    row = tau.rows[tableaux.row_of(tau, x)]
    return row[1] if len(row) == 2 else INFINITY


def _check_two_col(grid, f, tau, t, i):
    assert all(_increasing(row) for row in grid), '(2c-a): row not increasing'
    assert _rows_within_tau(grid, tau), '(2c-a): entry outside its tau row'
    assert _column_counts(grid, 2) == _t_column_counts(t, i, 2), \
        '(2c-b): column counts differ from T'
    first = [p for p in range(len(grid)) if grid[p][0] is not None]
    others = [p for p in range(len(grid)) if grid[p][0] is None and grid[p][1] is not None]
    assert all((f[p] != INFINITY) == (p in first) for p in range(len(grid))), \
        '(2c-c): finite indices do not match filled first boxes'
    assert max((f[p] for p in first), default=0) == len(others), \
        '(2c-c): largest index differs from the number of half rows'


def construct_two_col(tau, t):
    t = _require_family(tau, t, 'two_column')
    r = len(t.rows)
    grid = [[None, None] for _ in range(r)]
    f = [INFINITY] * r
    steps, aux = [], []
    outcome = SUCCESS
    for i in range(1, t.n + 1):
        p = tableaux.row_of(tau, i)
        if grid[p][1] is not None:
            outcome = Outcome(False, i, 'first')
            break
        if tableaux.column_of(t, i) == 1:
            grid[p][1] = i
            f = [x + 1 if x < f[p] else x for x in f]
        else:
            if f[p] == 0:
                outcome = Outcome(False, i, 'second')
                break
            grid[p][1] = i
            loose = [row[1] for row in grid if row[0] is None and row[1] is not None]
            with_right = [x for x in loose if _omega(tau, x) != INFINITY]
            if with_right:
                j = min(with_right, key=lambda x: _omega(tau, x))
            else:
                j = min(loose, key=lambda x: tableaux.row_of(tau, x))
            pj = tableaux.row_of(tau, j)
            grid[pj] = [j, None]
            f = [0 if q == pj else (x if x < f[p] else x - 1)
                 for (q, x) in enumerate(f)]
        _check_two_col(grid, f, tau, t, i)
        steps.append(_freeze(grid))
        aux.append(tuple(f))
    return _finish('two_column', tau, t, steps, aux, outcome)


###########
# Hook case
###########

def _hook_columns_match(grid, t, i):
    s = len(t.rows[0])
    return _column_counts(grid, s) == _t_column_counts(t, i, s)


def _check_hook(grid, tau, t, i):
    assert _increasing(grid[0]), '(h-a): first row not increasing'
    assert _rows_within_tau(grid, tau), '(h-a): entry outside its tau row'
    target = _placed(tau, i, len(grid), len(grid[0]))
    moved = [(p, c) for p in range(len(grid)) for c in range(len(grid[0]))
             if grid[p][c] != target[p][c] and grid[p][c] is not None]
    assert len(moved) <= 1 and all(p >= 1 for (p, _) in moved), \
        '(h-c): more than one misplaced entry'


def construct_hook(tau, t):
    t = _require_family(tau, t, 'hook')
    r, s = len(t.rows), len(t.rows[0])
    grid = [[None] * (s + 1) for _ in range(r)]
    steps, aux = [], []
    outcome = SUCCESS
    for i in range(1, t.n + 1):
        p = tableaux.row_of(tau, i)
        col = sum(1 for x in tau.rows[0] if x < i)
        previous = _freeze(grid)
        assert grid[p][col] is None, 'hook insertion box is occupied'
        grid[p][col] = i
        if tableaux.row_of(t, i) == 0:
            if previous != _freeze(_placed(tau, i - 1, r, s + 1)):
                outcome = Outcome(False, i, 'first')
                break
        else:
            if col > 0 and _freeze(grid) == _freeze(_placed(tau, i, r, s + 1)):
                outcome = Outcome(False, i, 'second')
                break
            if col > 0:
                q = min(q for q in range(1, r) if grid[q][col] is not None)
                grid[q][0], grid[q][col] = grid[q][col], None
        if not _hook_columns_match(grid, t, i):
            # i is in the first row of T but nothing below i is in the first
            # row of tau, so i lands in the first column
            outcome = Outcome(False, i, 'column count')
            break
        _check_hook(grid, tau, t, i)
        steps.append(_freeze(grid))
        aux.append(_freeze(grid) == _freeze(_placed(tau, i, r, s + 1)))
    return _finish('hook', tau, t, steps, aux, outcome)


##########
# Dispatch
##########

ALGORITHMS = (
    ('hook', construct_hook),
    ('two_row', construct_two_row),
    ('two_column', construct_two_col),
    )


def construct(tau, t, family=None):
    '''Run the algorithm for the given family, or the first that applies.'''
    t = common_shape(tau, t)
    families = applicable_families(t.shape)
    for (name, algorithm) in ALGORITHMS:
        if (family is None and name in families) or name == family:
            return algorithm(tau, t)
    raise ValueError('unknown shape family {!r}'.format(family))


def constructible(tau, t):
    '''Membership by constructibility; every applicable algorithm must agree.'''
    t = common_shape(tau, t)
    families = applicable_families(t.shape)
    traces = [algorithm(tau, t) for (name, algorithm) in ALGORITHMS if name in families]
    if len(set(trace.outcome.success for trace in traces)) != 1:
        raise ConsistencyError('construction algorithms disagree on {}|{}'.format(tau, t))
    outcome = traces[0].outcome
    witness = None if outcome.success else (outcome.step, outcome.kind)
    return MembershipVerdict(outcome.success, 'constructible', witness)
