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

'''Miscellaneous utility functions.'''

import re


INFINITY = float('inf')


class ConsistencyError(RuntimeError):

    """Two computations that are known to agree gave different answers."""


TRUE_WORDS = ('true', 'yes', 'on', '1')
FALSE_WORDS = ('false', 'no', 'off', '0')


def bool_from_str(s):
    word = s.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError('Expected one of {}, got {!r}'.format('/'.join(TRUE_WORDS + FALSE_WORDS), s))


def int_from_str(s, minimum=None):
    try:
        value = int(s.strip())
    except (AttributeError, ValueError):
        raise ValueError('Expected an integer, got {!r}'.format(s))
    if minimum is not None and value < minimum:
        raise ValueError('Expected an integer >= {}, got {}'.format(minimum, value))
    return value


def parse_int_list(text, sep=','):
    '''Parse "3, 4,8" into (3, 4, 8). Whitespace is ignored.'''
    stripped = re.sub(r'\s+', '', text or '')
    if not stripped:
        raise ValueError('empty list')
    pieces = stripped.split(sep)
    try:
        return tuple(int(piece) for piece in pieces)
    except ValueError:
        raise ValueError('malformed integer list {!r}'.format(text))


def nonempty_str(s):
    s = s.strip()
    if not s:
        raise ValueError('Expected a non-empty value')
    return s
