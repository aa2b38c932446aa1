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

'''Exhaustive enumeration and cross-validation of the membership and
intersection criteria on small shapes.'''

from collections import defaultdict, namedtuple
from math import factorial
import multiprocessing
import time

import networkx as nx

from .constructibility import construct_two_row, constructible, lemma_strip_check
from .diagrams import YoungDiagram, classify, dominates, partitions, strictly_dominates, transpose
from . import jdt
from . import meanders
from . import membership
from . import tableaux
from .util import ConsistencyError
from . import vogan


Check = namedtuple('Check', ['name', 'population', 'failures'])

BatchResult = namedtuple('BatchResult', ['lineno', 'tau', 't', 'verdict'])

RhoSequence = namedtuple('RhoSequence', ['pairs'])


class ValidationReport(namedtuple('ValidationReport', ['shape', 'checks', 'elapsed'])):

    __slots__ = ()

    @property
    def ok(self):
        return all(not check.failures for check in self.checks)

    @property
    def population(self):
        return sum(check.population for check in self.checks)


#############
# Enumeration
#############

def enumerate_standard(shape):
    return sorted(tableaux.iter_standard(shape))


def enumerate_row_standard(shape):
    return sorted(tableaux.iter_row_standard(shape))


def family_shapes(n):
    '''Shapes of n boxes that are hook, two-row or two-column.'''
    return [y for y in partitions(n) if not classify(y).general]


def hook_length_count(shape):
    columns = shape.columns
    hooks = 1
    for (r, c) in shape.cells():
        hooks *= (shape[r] - c) + (columns[c] - r) - 1
    return factorial(shape.n) // hooks


def multinomial_count(shape):
    count = factorial(shape.n)
    for length in shape:
        count //= factorial(length)
    return count


def k_pairs(shape):
    '''All (tau, T) of the shape with tau in the component of T.'''
    membership.applicable_families(shape)
    standard = enumerate_standard(shape)
    return [(tau, t) for tau in enumerate_row_standard(shape) for t in standard
            if membership.member(tau, t).member]


##################
# Cross-validation
##################

class _Suite(object):

    def __init__(self, shape):
        self.shape = shape
        self.family = classify(shape)
        self.standard = enumerate_standard(shape)
        self.row_standard = enumerate_row_standard(shape)
        self._members = {}
        self._derived = {}

    def is_member(self, tau, t):
        key = (tau, t)
        if key not in self._members:
            self._members[key] = membership.dominance_member(tau, t).member
        return self._members[key]

    def derived(self, fn, x):
        '''fn(x), computed once per tableau.'''
        key = (fn, x)
        if key not in self._derived:
            self._derived[key] = fn(x)
        return self._derived[key]

    def pairs(self):
        for tau in self.row_standard:
            for t in self.standard:
                yield tau, t

    def standard_pairs(self):
        for t in self.standard:
            for s in self.standard:
                yield t, s


def _label(*tabs):
    return '|'.join(str(x) for x in tabs)


def _check_enumeration(suite):
    failures = []
    if len(suite.standard) != hook_length_count(suite.shape):
        failures.append('standard count {}'.format(len(suite.standard)))
    if len(suite.row_standard) != multinomial_count(suite.shape):
        failures.append('row-standard count {}'.format(len(suite.row_standard)))
    return 2, failures


def _check_criteria(suite):
    failures = []
    population = 0
    for (tau, t) in suite.pairs():
        population += 1
        try:
            answers = {suite.is_member(tau, t),
                       membership.inductive_member(tau, t).member,
                       constructible(tau, t).member}
        except ConsistencyError:
            answers = {True, False}
        if len(answers) != 1:
            failures.append(_label(tau, t))
    return population, failures


def _check_standardization(suite):
    failures = [_label(tau) for tau in suite.row_standard
                if not suite.is_member(tau, suite.derived(tableaux.standardize, tau))]
    return len(suite.row_standard), failures


def _check_standardization_implication(suite):
    failures = [_label(tau, t) for (tau, t) in suite.pairs()
                if suite.is_member(tau, t) and
                not suite.is_member(suite.derived(tableaux.standardize, tau), t)]
    return len(suite.row_standard) * len(suite.standard), failures


def _check_row_equivalence(suite):
    classes = defaultdict(list)
    for tau in suite.row_standard:
        classes[tuple(sorted(tau.rows))].append(tau)
    failures = []
    for t in suite.standard:
        for taus in classes.values():
            if len(set(suite.is_member(tau, t) for tau in taus)) != 1:
                failures.append(_label(taus[0], t))
    return len(suite.standard) * len(classes), failures


def _check_schuetzenberger(suite):
    failures = []
    for (tau, t) in suite.pairs():
        dual = suite.is_member(suite.derived(tableaux.s_dual, tau),
                               suite.derived(jdt.schuetzenberger, t))
        if suite.is_member(tau, t) != dual:
            failures.append(_label(tau, t))
    return len(suite.row_standard) * len(suite.standard), failures


def _same_columns_above(tau, t, k):
    return all(tableaux.column_of(tau, x) == tableaux.column_of(t, x)
               for x in range(k + 1, t.n + 1))


def _restrictions(x):
    # indexed by k; k = 0 is never asked for
    return (None,) + tuple(tableaux.restrict(x, k) for k in range(1, x.n))


def _check_subtableaux(suite):
    failures = []
    population = 0
    for (tau, t) in suite.pairs():
        member = suite.is_member(tau, t)
        tau_subs, t_subs = suite.derived(_restrictions, tau), suite.derived(_restrictions, t)
        for k in range(1, t.n):
            sub_tau, sub_t = tau_subs[k], t_subs[k]
            if sub_tau.shape != sub_t.shape:
                continue
            population += 1
            sub_member = suite.is_member(sub_tau, sub_t)
            if member and not sub_member:
                failures.append('{} restricted to {}'.format(_label(tau, t), k))
            elif sub_member and not member and _same_columns_above(tau, t, k):
                failures.append('{} extended from {}'.format(_label(tau, t), k))
    return population, failures


def _check_standard_two_column(suite):
    failures = [_label(s, t) for (s, t) in suite.standard_pairs()
                if membership.two_col_standard_member(s, t) != suite.is_member(s, t)]
    return len(suite.standard) ** 2, failures


def _check_transpose_bridge(suite):
    failures = []
    for (s, t) in suite.standard_pairs():
        if suite.is_member(s, t):
            tt, st = tableaux.transpose_tableau(t), tableaux.transpose_tableau(s)
            if not suite.is_member(tt, st):
                failures.append(_label(s, t))
    return len(suite.standard) ** 2, failures


def _common_member(suite, t, s):
    return any(suite.is_member(x, t) and suite.is_member(x, s) for x in suite.standard)


def _check_intersection_graph(suite):
    failures = [_label(t, s) for (t, s) in suite.standard_pairs()
                if _common_member(suite, t, s) != meanders.is_even(meanders.meander(t, s))]
    return len(suite.standard) ** 2, failures


def _unordered(pairs):
    return set(frozenset(p) for p in pairs)


def _diff(name_a, a, name_b, b):
    failures = []
    for pair in sorted(a - b, key=sorted):
        failures.append('{} not in {}: {}'.format(name_a, name_b, _label(*sorted(pair))))
    for pair in sorted(b - a, key=sorted):
        failures.append('{} not in {}: {}'.format(name_b, name_a, _label(*sorted(pair))))
    return failures


def _distinct_pairs(suite):
    return [(t, s) for (t, s) in suite.standard_pairs() if t < s]


def _check_codim_one_triple(suite):
    pairs = _distinct_pairs(suite)
    by_meander = _unordered(p for p in pairs if meanders.intersection_2row(*p).codim_one)
    by_vogan = vogan.pair_set(vogan.vogan_set(suite.shape))
    by_rows = _unordered(p for p in pairs if meanders.codim_one_condition_iii(*p))
    failures = _diff('meander', by_meander, 'vogan', by_vogan)
    failures += _diff('meander', by_meander, 'first-row', by_rows)
    return len(pairs), failures


def _check_hook_codim_one(suite):
    pairs = _distinct_pairs(suite)
    failures = []
    by_formula = set()
    for p in pairs:
        try:
            if meanders.hook_intersection(*p).codim_one:
                by_formula.add(frozenset(p))
        except ConsistencyError as ex:
            failures.append(str(ex))
    by_seeds = vogan.pair_set(vogan.hook_vogan_set(suite.shape))
    failures += _diff('formula', by_formula, 'seeds', by_seeds)
    return len(pairs), failures


def _transposed_pairs(pairs):
    return set(frozenset(tableaux.transpose_tableau(x) for x in pair) for pair in pairs)


def _check_two_column_codim_one(suite):
    pairs = _distinct_pairs(suite)
    by_bridge = _unordered(p for p in pairs if meanders.two_col_codim_one(*p))
    dual = vogan.pair_set(vogan.vogan_set(transpose(suite.shape)))
    own = vogan.pair_set(vogan.vogan_set(suite.shape))
    failures = _diff('bridge', by_bridge, 'transposed vogan', _transposed_pairs(dual))
    failures += _diff('vogan', own, 'transposed vogan', _transposed_pairs(dual))
    return len(pairs), failures


def _check_codim_one_membership(suite):
    failures = []
    pairs = _distinct_pairs(suite)
    for (t, s) in pairs:
        try:
            codim_one = meanders.classify_intersection(t, s).codim_one
        except ConsistencyError as ex:
            failures.append(str(ex))
            continue
        if codim_one and not (suite.is_member(s, t) or suite.is_member(t, s)):
            failures.append(_label(t, s))
    return len(pairs), failures


def _check_quotient_shapes(suite):
    failures = []
    population = 0
    n = suite.shape.n
    for (t, s) in suite.standard_pairs():
        if t == s:
            continue
        population += 1
        if not any(strictly_dominates(jdt.quotient_shape_T(t, i, j), jdt.quotient_shape_T(s, i, j))
                   for i in range(n) for j in range(i + 1, n + 1)):
            failures.append(_label(t, s))
    return population, failures


def _check_precedes(suite):
    failures = []
    for (s, t) in _distinct_pairs(suite):
        forward, backward = membership.precedes(s, t), membership.precedes(t, s)
        if forward == backward:
            failures.append('unordered: {}'.format(_label(s, t)))
        elif (forward and suite.is_member(t, s)) or (backward and suite.is_member(s, t)):
            failures.append('member against order: {}'.format(_label(s, t)))
    return len(suite.standard) ** 2, failures


def _check_strip_lemma(suite):
    failures = []
    for (tau, t) in suite.pairs():
        if not lemma_strip_check(construct_two_row(tau, t)):
            failures.append(_label(tau, t))
    return len(suite.row_standard) * len(suite.standard), failures


# name, required family (None: any family), check
CHECKS = (
    ('enumeration', None, _check_enumeration),
    ('criteria', None, _check_criteria),
    ('standardization', None, _check_standardization),
    ('standardization-implication', None, _check_standardization_implication),
    ('row-equivalence', None, _check_row_equivalence),
    ('schuetzenberger', None, _check_schuetzenberger),
    ('subtableaux', None, _check_subtableaux),
    ('standard-two-column', 'two_column', _check_standard_two_column),
    ('transpose-bridge', 'two_row', _check_transpose_bridge),
    ('intersection-graph', 'two_row', _check_intersection_graph),
    ('codim-one-triple', 'two_row', _check_codim_one_triple),
    ('hook-codim-one', 'hook', _check_hook_codim_one),
    ('two-column-codim-one', 'two_column', _check_two_column_codim_one),
    ('codim-one-membership', None, _check_codim_one_membership),
    ('quotient-shapes', None, _check_quotient_shapes),
    ('precedes', None, _check_precedes),
    ('strip-lemma', 'two_row', _check_strip_lemma),
    )

CHECK_NAMES = tuple(name for (name, _, _) in CHECKS)


def cross_validate(shape, progress=None, only=None):
    '''Run every check that applies to the shape.

    only restricts the run to the named checks. progress, if given, is
    called with one line of text per finished check.
    '''
    membership.applicable_families(shape)
    if only is not None:
        unknown = set(only) - set(CHECK_NAMES)
        if unknown:
            raise ValueError('unknown checks: {}'.format(', '.join(sorted(unknown))))
    start = time.time()
    suite = _Suite(shape)
    checks = []
    for (name, family, check) in CHECKS:
        if only is not None and name not in only:
            continue
        if family is not None and not getattr(suite.family, family):
            continue
        population, failures = check(suite)
        checks.append(Check(name, population, sorted(failures)))
        if progress is not None:
            progress('{}: {} ({} cases, {} failures)'.format(shape, name, population, len(failures)))
    return ValidationReport(shape, checks, time.time() - start)


def suite_shapes(max_boxes, max_boxes_two_row):
    shapes = []
    for n in range(1, max(max_boxes, max_boxes_two_row) + 1):
        for y in family_shapes(n):
            if n <= max_boxes or (classify(y).two_row and n <= max_boxes_two_row):
                shapes.append(y)
    return shapes


def validate_all(max_boxes, max_boxes_two_row=None, workers=1, progress=None):
    '''Cross-validate every family shape up to the bounds.

    Returns the reports, in shape order, and the outcome of
    remark_89_check.
    '''
    if max_boxes_two_row is None:
        max_boxes_two_row = max_boxes
    shapes = suite_shapes(max_boxes, max_boxes_two_row)
    if workers > 1:
        pool = multiprocessing.Pool(workers)
        try:
            reports = []
            for report in pool.imap(cross_validate, shapes):
                if progress is not None:
                    progress('{}: {} checks, {} cases{}'.format(
                        report.shape, len(report.checks), report.population,
                        '' if report.ok else ', FAILED'))
                reports.append(report)
        finally:
            pool.close()
            pool.join()
    else:
        reports = [cross_validate(y, progress=progress) for y in shapes]
    return reports, remark_89_check()


##########################
# Intersections and graphs
##########################

def intersection_graph(shape):
    '''Standard tableaux joined when some standard tableau lies in both
    components. Edges carry the codim_one flag.'''
    membership.applicable_families(shape)
    suite = _Suite(shape)
    graph = nx.Graph()
    for t in suite.standard:
        graph.add_node(str(t), tableau=t)
    for (t, s) in _distinct_pairs(suite):
        if _common_member(suite, t, s):
            graph.add_edge(str(t), str(s),
                           codim_one=meanders.classify_intersection(t, s).codim_one)
    if suite.family.two_row:
        by_meander = set(frozenset((str(t), str(s))) for (t, s) in _distinct_pairs(suite)
                         if meanders.is_even(meanders.meander(t, s)))
        if by_meander != set(frozenset(e) for e in graph.edges()):
            raise ConsistencyError('intersection graph of {} differs from meander evenness'
                                   .format(shape))
    return graph


#################
# Counterexamples
#################

def r_minus_k_pair(shape):
    '''A pair (tau, T) with tau <= T in the dominance sense although the
    flag of tau is not in the component of T. Needs at least three rows
    and row lengths l1 > l2 >= 2.'''
    rows = shape.rows
    if not shape.contains(YoungDiagram((3, 2, 1))):
        raise ValueError('shape {} does not contain 3,2,1'.format(shape))
    if rows[0] == rows[1]:
        raise ValueError('shape {} has equal first rows; only l1 > l2 is supported'.format(shape))
    l1, l2, l3 = rows[:3]
    r1 = list(range(7, l1 + 4))
    r2 = list(range(l1 + 4, l1 + l2 + 2))
    r3 = list(range(l1 + l2 + 2, l1 + l2 + l3 + 1))
    rest = []
    total = l1 + l2 + l3
    for length in rows[3:]:
        rest.append(list(range(total + 1, total + length + 1)))
        total += length
    tau = tableaux.RowStandardTableau([[1, 2, 5] + r1, [4, 6] + r2, [3] + r3] + rest)
    t = tableaux.StandardTableau([[1, 2, 5] + r1, [3, 4] + r2, [6] + r3] + rest)
    return tau, t


def enumerate_rho(n):
    '''Double sequences (i_k, j_k), k = 0..n, from some (i0, i0) to (0, n),
    each step lowering i or raising j by one.'''
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    def extend(path):
        i, j = path[-1]
        if len(path) == n + 1:
            yield RhoSequence(tuple(path))
            return
        if i > 0:
            for result in extend(path + [(i - 1, j)]):
                yield result
        if j < n:
            for result in extend(path + [(i, j + 1)]):
                yield result
    sequences = []
    for i0 in range(n + 1):
        sequences.extend(extend([(i0, i0)]))
    return sequences


REMARK_T = '1,2,5/3,4/6'
REMARK_S = '1,2,5/3,6/4'


def remark_89_check():
    '''For a pair on the general shape 3,2,1: every quotient shape of S is
    dominated by that of T, and along every double sequence of length 6
    the domination is strict at k = 5.'''
    t = tableaux.parse_standard(REMARK_T)
    s = tableaux.parse_standard(REMARK_S)
    n = t.n
    weak = all(dominates(jdt.quotient_shape_T(s, i, j), jdt.quotient_shape_T(t, i, j))
               for i in range(n) for j in range(i + 1, n + 1))
    strict = all(strictly_dominates(jdt.quotient_shape_T(s, *rho.pairs[5]),
                                    jdt.quotient_shape_T(t, *rho.pairs[5]))
                 for rho in enumerate_rho(n))
    return weak and strict


#######
# Batch
#######

def parse_pair(text):
    '''Parse "tau|T" into (RowStandardTableau, StandardTableau).'''
    pieces = text.split('|')
    if len(pieces) != 2:
        raise ValueError('expected "tau|T", got {!r}'.format(text.strip()))
    return tableaux.parse_tableau(pieces[0]), tableaux.parse_standard(pieces[1])


def evaluate_batch(lines, decide=membership.member):
    '''Decide every "tau|T" line; blank lines and # comments are skipped.'''
    results = []
    for (lineno, line) in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith('#'):
            continue
        try:
            tau, t = parse_pair(line)
            verdict = decide(tau, t)
        except ValueError as ex:
            raise ValueError('line {}: {}'.format(lineno, ex))
        results.append(BatchResult(lineno, tau, t, verdict))
    return results
