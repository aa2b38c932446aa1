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

'''Deciding whether the fixed flag of a row-standard tableau tau lies in
the component of a standard tableau T.

dominance_member decides the relation tau <= T through quotient shapes and
works on every shape; on hook, two-row and two-column shapes it coincides
with membership, and so do the inductive criteria hook_A, two_row_A and
two_col_A defined here and the algorithms in constructibility.
'''

from collections import namedtuple

from .diagrams import classify, dominates, strictly_dominates
from . import jdt
from . import tableaux
from .util import ConsistencyError, INFINITY


CRITERIA = ('dominance', 'hook_A', 'two_row_A', 'two_col_A', 'constructible')

MembershipVerdict = namedtuple('MembershipVerdict', ['member', 'criterion', 'witness'])


def common_shape(tau, t):
    '''Check that tau and t have the same shape and return t as a
    StandardTableau.'''
    t = tableaux.as_standard(t)
    if tau.shape != t.shape:
        raise ValueError('shape mismatch: {} and {}'.format(tau, t))
    return t


def _require_family(tau, t, family):
    t = common_shape(tau, t)
    if not getattr(classify(t.shape), family):
        raise ValueError('shape {} is not {}'.format(t.shape, family.replace('_', '-')))
    return t


def _counts_dominated(counts, rows):
    '''Row counts, sorted decreasingly, are dominated by the partition rows.'''
    total = bound = 0
    for (a, b) in zip(sorted(counts, reverse=True), rows + (0,) * len(counts)):
        total += a
        bound += b
        if total > bound:
            return False
    return True


def dominance_member(tau, t):
    t = common_shape(tau, t)
    n = t.n
    positions = tau.positions()
    row = [positions[x][0] for x in range(1, n + 1)]
    for i in range(n):
        counts = [0] * len(tau.rows)
        for j in range(i + 1, n + 1):
            # counts is the row profile of tau[i+1..j]
            counts[row[j - 1]] += 1
            if not _counts_dominated(counts, jdt.quotient_shape_T(t, i, j).rows):
                return MembershipVerdict(False, 'dominance', (i, j))
    return MembershipVerdict(True, 'dominance', None)


def prefix_dominance(tau, t):
    '''First i with Y_{i/0}(tau) not dominated by Y_i^T, or None.'''
    t = common_shape(tau, t)
    for i in range(1, t.n + 1):
        if not dominates(jdt.quotient_shape_tau(tau, 0, i), tableaux.prefix_shape(t, i)):
            return i
    return None


def precedes(s, t):
    '''Total order on standard tableaux of one shape: compare the shapes of
    entries 1..i at the smallest entry i placed differently.'''
    t = common_shape(s, t)
    s = tableaux.as_standard(s)
    sp, tp = s.positions(), t.positions()
    for i in range(1, s.n + 1):
        if sp[i] != tp[i]:
            return strictly_dominates(tableaux.prefix_shape(s, i), tableaux.prefix_shape(t, i))
    return False


###########
# Hook case
###########

def _hook_failure(tau, t):
    a, a_ = t.rows[0], tau.rows[0]
    for q in range(1, len(a)):
        if not a_[q - 1] < a[q] <= a_[q]:
            return 'q={}'.format(q + 1)
    return None


def hook_A(tau, t):
    '''First rows a of T and a' of tau interlace: a'_{q-1} < a_q <= a'_q.'''
    t = _require_family(tau, t, 'hook')
    return _hook_failure(tau, t) is None


##############
# Two-row case
##############

def _two_row_rectangular(t, i):
    if i % 2 or len(t.rows) != 2:
        return False
    return all(sum(1 for x in row if x <= i) == i // 2 for row in t.rows)


def _two_row_hat(tau, t):
    '''Which condition puts (tau, T) in the A-hat set.

    Returns ('rectangle', i) with i the largest split below n, ('full', n)
    when the only split is at n, ('first', 1) for the second condition, or
    None.
    '''
    n = t.n
    splits = [i for i in range(2, n + 1, 2)
              if _two_row_rectangular(tau, i) and _two_row_rectangular(t, i)]
    if splits:
        below = [i for i in splits if i < n]
        if below:
            return ('rectangle', below[-1])
        return ('full', n)
    never_rectangular = not any(_two_row_rectangular(t, i) for i in range(2, n + 1, 2))
    if never_rectangular and tableaux.row_of(tau, 1) == 0:
        return ('first', 1)
    return None


def two_row_eta(tau, t):
    '''One reduction step of the two-row criterion, as a tuple of one or two
    (tau', T') pairs.'''
    t = _require_family(tau, t, 'two_row')
    hat = _two_row_hat(tau, t)
    if hat is None:
        raise ValueError('pair not in the two-row A-hat set: {}|{}'.format(tau, t))
    case, i = hat
    if case == 'rectangle':
        return ((tableaux.restrict(tau, i), tableaux.restrict(t, i)),
                (tableaux.shift(tau, i), tableaux.shift(t, i)))
    if case == 'full':
        n = t.n
        if tableaux.row_of(tau, n) == 0:
            tau = tableaux.swap_rows(tau)
        return ((tableaux.restrict(tau, n - 1), tableaux.restrict(t, n - 1)),)
    return ((tableaux.shift(tau, 1), tableaux.shift(t, 1)),)


def _two_row_failure(tau, t):
    stack = [(tau, t)]
    while stack:
        tau, t = stack.pop()
        if t.n == 1:
            continue
        if _two_row_hat(tau, t) is None:
            return '{}|{}'.format(tau, t)
        stack.extend(two_row_eta(tau, t))
    return None


def two_row_A(tau, t):
    t = _require_family(tau, t, 'two_row')
    return _two_row_failure(tau, t) is None


#################
# Two-column case
#################

def _omega(tau, i):
    row = tau.rows[tableaux.row_of(tau, i)]
    return row[1] if len(row) == 2 else INFINITY


def _nu(tau, j):
    return tau.rows[tableaux.row_of(tau, j)][0]


def _two_col_hat(tau, t):
    '''Return (i, j, i') for a pair in the two-column A-hat set, else None.'''
    if t == tableaux.standardize(tau):
        return None
    n = t.n
    i = min(x for x in range(1, n + 1)
            if tableaux.column_of(tau, x) != tableaux.column_of(t, x))
    if not (tableaux.column_of(tau, i) == 0 and tableaux.column_of(t, i) == 1):
        return None
    candidates = [x for x in range(i + 1, n + 1)
                  if tableaux.column_of(tau, x) == 1 and _nu(tau, x) <= i]
    if not candidates:
        return None
    j = candidates[0]
    for k in range(i, j):
        if tableaux.column_of(tau, k) == 0 and _omega(tau, k) > j:
            return (i, j, k)
    return None


def two_col_eta(tau, t):
    '''One reduction step of the two-column criterion: (tau~, T).'''
    t = _require_family(tau, t, 'two_column')
    hat = _two_col_hat(tau, t)
    if hat is None:
        raise ValueError('pair not in the two-column A-hat set: {}|{}'.format(tau, t))
    i, j, _ = hat
    for k in range(i + 1, j):
        if tableaux.column_of(tau, k) == 0 and _omega(tau, i) < _omega(tau, k):
            return (tableaux.swap_entries(tau, i, k), t)
    return (tableaux.swap_entries(tau, i, j), t)


def _two_col_failure(tau, t):
    seen = set()
    while t != tableaux.standardize(tau):
        if _two_col_hat(tau, t) is None:
            return '{}|{}'.format(tau, t)
        if tau in seen:
            raise ConsistencyError('two-column reduction cycles at {}|{}'.format(tau, t))
        seen.add(tau)
        tau, t = two_col_eta(tau, t)
    return None


def two_col_A(tau, t):
    t = _require_family(tau, t, 'two_column')
    return _two_col_failure(tau, t) is None


def two_col_standard_member(s, t):
    '''Membership for a standard s on a two-column shape: prefix shapes of s
    are dominated by those of T.'''
    if not tableaux.is_standard(s):
        raise ValueError('not a standard tableau: {}'.format(s))
    t = _require_family(s, t, 'two_column')
    return prefix_dominance(s, t) is None


##########
# Dispatch
##########

A_CRITERIA = (
    ('hook', 'hook_A', _hook_failure),
    ('two_row', 'two_row_A', _two_row_failure),
    ('two_column', 'two_col_A', _two_col_failure),
    )


def applicable_families(shape):
    family = classify(shape)
    if family.general:
        raise ValueError('membership undecided for general shapes: {}'.format(shape))
    return family.names()


def member(tau, t):
    t = common_shape(tau, t)
    applicable_families(t.shape)
    return dominance_member(tau, t)


def inductive_member(tau, t):
    '''Run every A-criterion that applies to the shape; they must agree.'''
    t = common_shape(tau, t)
    families = applicable_families(t.shape)
    verdicts = []
    for (family, name, failure) in A_CRITERIA:
        if family in families:
            tag = failure(tau, t)
            verdicts.append(MembershipVerdict(tag is None, name, tag))
    if len(set(v.member for v in verdicts)) != 1:
        raise ConsistencyError('A-criteria disagree on {}|{}: {}'.format(
            tau, t, ', '.join('{}={}'.format(v.criterion, v.member) for v in verdicts)))
    return verdicts[0]
