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

'''Cup diagrams, meanders and the classification of component
intersections for hook, two-row and two-column shapes.'''

from collections import namedtuple

import networkx as nx

from .diagrams import classify, springer_dim
from .membership import applicable_families, dominance_member, two_col_standard_member
from . import render
from . import tableaux
from .util import ConsistencyError


CupDiagram = namedtuple('CupDiagram', ['n', 'arcs', 'fixed'])

Component = namedtuple('Component', ['kind', 'length', 'points'])

Meander = namedtuple('Meander', ['top', 'bottom', 'components'])

Intersection = namedtuple('Intersection', ['nonempty', 'dim', 'codim', 'codim_one'])

ClassifiedIntersection = namedtuple(
    'ClassifiedIntersection', ['families', 'nonempty', 'dim', 'codim', 'codim_one'])


def _same_shape(t, s, family):
    t = tableaux.as_standard(t)
    s = tableaux.as_standard(s)
    if t.shape != s.shape:
        raise ValueError('shape mismatch: {} and {}'.format(t, s))
    if family is not None and not getattr(classify(t.shape), family):
        raise ValueError('shape {} is not {}'.format(t.shape, family.replace('_', '-')))
    return t, s


def cup_diagram(t):
    '''Match each second-row entry with the largest free first-row entry
    below it.'''
    t = tableaux.as_standard(t)
    if len(t.rows) > 2:
        raise ValueError('more than 2 rows: {}'.format(t))
    open_ = []
    arcs = []
    for x in range(1, t.n + 1):
        if tableaux.row_of(t, x) == 0:
            open_.append(x)
        else:
            arcs.append((open_.pop(), x))
    return CupDiagram(t.n, tuple(arcs), tuple(open_))


def parenthesis_word(t):
    cups = cup_diagram(t)
    word = ['•'] * cups.n
    for (a, b) in cups.arcs:
        word[a - 1] = '('
        word[b - 1] = ')'
    return ''.join(word)


def _partners(cups):
    partner = {}
    for (a, b) in cups.arcs:
        partner[a] = b
        partner[b] = a
    return partner


def _walk(start, first_side, sides):
    '''Follow arcs from start, alternating sides, until the path ends or
    closes up.'''
    points = [start]
    side = first_side
    current = start
    while True:
        nxt = sides[side].get(current)
        if nxt is None or nxt == start:
            return points
        points.append(nxt)
        current = nxt
        side = 1 - side


def meander(t, s):
    t, s = _same_shape(t, s, 'two_row')
    top, bottom = cup_diagram(t), cup_diagram(s)
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(1, t.n + 1))
    graph.add_edges_from(top.arcs, side='top')
    graph.add_edges_from(bottom.arcs, side='bottom')
    sides = (_partners(top), _partners(bottom))
    components = []
    for nodes in sorted(nx.connected_components(graph), key=min):
        sub = graph.subgraph(nodes)
        length = sub.number_of_edges()
        if length and all(d == 2 for (_, d) in sub.degree()):
            points = _walk(min(nodes), 0, sides)
            components.append(Component('loop', length, tuple(points)))
        else:
            start = min(x for (x, d) in sub.degree() if d <= 1)
            points = _walk(start, 0 if start in sides[0] else 1, sides)
            components.append(Component('interval', length, tuple(points)))
    return Meander(top, bottom, tuple(components))


def loops(m):
    return [c for c in m.components if c.kind == 'loop']


def intervals(m):
    return [c for c in m.components if c.kind == 'interval']


def is_even(m):
    '''Every interval has even length (vacuously true without intervals).'''
    return all(c.length % 2 == 0 for c in intervals(m))


def summary(m, codim_one):
    return '{}, loops={}, intervals=[{}], codim1={}'.format(
        'even' if is_even(m) else 'odd', len(loops(m)),
        ', '.join(str(c.length) for c in intervals(m)),
        'true' if codim_one else 'false')


def intersection_2row(t, s):
    t, s = _same_shape(t, s, 'two_row')
    m = meander(t, s)
    if not is_even(m):
        return Intersection(False, None, None, False)
    dim = len(loops(m))
    codim = springer_dim(t.shape) - dim
    return Intersection(True, dim, codim, codim == 1)


def _adjacent_swap(t, s):
    '''True if s is t with some i, i+1 (2 <= i <= n-1) exchanged.'''
    tp, sp = t.positions(), s.positions()
    moved = sorted(x for x in tp if tp[x] != sp[x])
    return (len(moved) == 2 and moved[1] == moved[0] + 1 and 2 <= moved[0] <= t.n - 1 and
            tp[moved[0]] == sp[moved[1]] and tp[moved[1]] == sp[moved[0]])


def hook_intersection(t, s):
    t, s = _same_shape(t, s, 'hook')
    a, a_ = t.rows[0], s.rows[0]
    nonempty = all(max(a[q - 1], a_[q - 1]) < min(a[q], a_[q]) for q in range(1, len(a)))
    if not nonempty:
        result = Intersection(False, None, None, False)
    else:
        codim = sum(abs(x - y) for (x, y) in zip(a[1:], a_[1:]))
        result = Intersection(True, springer_dim(t.shape) - codim, codim, codim == 1)
    if result.codim_one != _adjacent_swap(t, s):
        raise ConsistencyError('hook codimension formula and adjacent swap test '
                               'disagree on {} and {}'.format(t, s))
    return result


def two_col_codim_one(t, s):
    t, s = _same_shape(t, s, 'two_column')
    return intersection_2row(tableaux.transpose_tableau(t),
                             tableaux.transpose_tableau(s)).codim_one


def two_col_intersection(t, s):
    '''Nonempty when some standard tableau lies in both components.'''
    t, s = _same_shape(t, s, 'two_column')
    nonempty = any(two_col_standard_member(x, t) and two_col_standard_member(x, s)
                   for x in tableaux.iter_standard(t.shape))
    if not nonempty:
        return Intersection(False, None, None, False)
    if t == s:
        return Intersection(True, springer_dim(t.shape), 0, False)
    codim_one = two_col_codim_one(t, s)
    return Intersection(True, None, 1 if codim_one else None, codim_one)


def codim_one_condition_iii(t, s):
    '''One tableau lies in the other's component and their first rows share
    all entries but one.'''
    t, s = _same_shape(t, s, 'two_row')
    related = dominance_member(s, t).member or dominance_member(t, s).member
    shared = len(set(t.rows[0]) & set(s.rows[0]))
    return related and shared == len(t.rows[0]) - 1


CLASSIFIERS = (
    ('hook', hook_intersection),
    ('two_row', intersection_2row),
    ('two_column', two_col_intersection),
    )


def classify_intersection(t, s):
    '''Run every classifier that applies to the shape; they must agree.'''
    t, s = _same_shape(t, s, None)
    families = applicable_families(t.shape)
    results = [classifier(t, s) for (name, classifier) in CLASSIFIERS if name in families]
    for field in ('nonempty', 'codim_one', 'dim', 'codim'):
        values = set(getattr(r, field) for r in results) - {None}
        if len(values) > 1:
            raise ConsistencyError('intersection classifiers disagree on {} for {} and {}'
                                   .format(field, t, s))
    def first(field):
        return next((getattr(r, field) for r in results if getattr(r, field) is not None), None)
    return ClassifiedIntersection(families, results[0].nonempty, first('dim'),
                                  first('codim'), results[0].codim_one)


def render_svg(m, spacing=40):
    return render.render_meander_svg(m, spacing)
