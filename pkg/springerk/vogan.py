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

'''Descents, Vogan transformations and the set of pairs they generate.'''

from collections import deque, namedtuple

from .diagrams import classify
from . import tableaux


VoganPair = namedtuple('VoganPair', ['first', 'second', 'provenance'])


def descents(t):
    '''Entries i with i+1 in a lower row than i.'''
    t = tableaux.as_standard(t)
    return set(i for i in range(1, t.n) if tableaux.row_of(t, i) < tableaux.row_of(t, i + 1))


def in_ab_domain(t, i, forward=True):
    '''forward: i+1 is a descent but not i; backward: i is a descent but
    not i+1.'''
    if not 1 <= i <= t.n - 2:
        return False
    d = descents(t)
    if forward:
        return i + 1 in d and i not in d
    return i in d and i + 1 not in d


def _swapped(t, a, b):
    swapped = tableaux.swap_entries(t, a, b)
    if not tableaux.is_standard(swapped):
        raise ValueError('swapping {} and {} in {} breaks a column'.format(a, b, t))
    return tableaux.as_standard(swapped)


def vogan_t_ab(t, i, forward=True):
    t = tableaux.as_standard(t)
    if not in_ab_domain(t, i, forward):
        raise ValueError('{} is outside the {} domain at i={}'.format(
            t, 'forward' if forward else 'backward', i))
    if forward:
        if tableaux.row_of(t, i) < tableaux.row_of(t, i + 2):
            return _swapped(t, i + 1, i + 2)
        return _swapped(t, i, i + 1)
    for (a, b) in ((i, i + 1), (i + 1, i + 2)):
        candidate = tableaux.swap_entries(t, a, b)
        if not tableaux.is_standard(candidate):
            continue
        candidate = tableaux.as_standard(candidate)
        if in_ab_domain(candidate, i, True) and vogan_t_ab(candidate, i, True) == t:
            return candidate
    raise ValueError('no preimage of {} at i={}'.format(t, i))


def in_i_domain(t, i):
    if not 2 <= i <= t.n - 1:
        return False
    (r1, c1), (r2, c2) = tableaux.position(t, i), tableaux.position(t, i + 1)
    return r1 != r2 and c1 != c2


def vogan_t_i(t, i):
    t = tableaux.as_standard(t)
    if not in_i_domain(t, i):
        raise ValueError('{} is outside the domain of T_{}'.format(t, i))
    return tableaux.as_standard(tableaux.swap_entries(t, i, i + 1))


def _key(a, b):
    return (a, b) if a < b else (b, a)


def seeds(shape):
    '''The pairs (T, T_i(T)) with T in the domain of T_i.'''
    for t in tableaux.iter_standard(shape):
        for i in range(2, shape.n):
            if in_i_domain(t, i):
                yield VoganPair(t, vogan_t_i(t, i), (('seed', t, i),))


def vogan_set(shape):
    '''Close the seed pairs under the transformations T_ab applied to both
    members at once. Pairs are unordered; each keeps one witness path.'''
    found = {}
    queue = deque()
    for pair in seeds(shape):
        key = _key(pair.first, pair.second)
        if key not in found:
            found[key] = pair
            queue.append(pair)
    while queue:
        pair = queue.popleft()
        for i in range(1, shape.n - 1):
            for forward in (True, False):
                if not (in_ab_domain(pair.first, i, forward) and
                        in_ab_domain(pair.second, i, forward)):
                    continue
                first = vogan_t_ab(pair.first, i, forward)
                second = vogan_t_ab(pair.second, i, forward)
                key = _key(first, second)
                if key not in found:
                    found[key] = VoganPair(first, second,
                                           pair.provenance + (('ab', i, forward),))
                    queue.append(found[key])
    return [found[key] for key in sorted(found)]


def hook_vogan_set(shape):
    if not classify(shape).hook:
        raise ValueError('shape {} is not hook'.format(shape))
    return sorted(seeds(shape), key=lambda p: _key(p.first, p.second))


def replay(pair):
    '''Rebuild (first, second) from the provenance of a VoganPair.'''
    (_, t, i) = pair.provenance[0]
    first, second = t, vogan_t_i(t, i)
    for (_, j, forward) in pair.provenance[1:]:
        first, second = vogan_t_ab(first, j, forward), vogan_t_ab(second, j, forward)
    return first, second


def pair_set(pairs):
    '''Unordered pairs as a set of frozensets, for comparing pair sets.'''
    return set(frozenset((p[0], p[1])) for p in pairs)
