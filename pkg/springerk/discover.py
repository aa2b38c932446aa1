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

'''Criterion plugins: every module in springerk/criteria/ that exports
a ``criterion`` class.'''

import importlib
import os
import pkgutil

from . import criteria
from .util import ConsistencyError


def criterion_modules():
    here = os.path.dirname(criteria.__file__)
    for (_, module_name, _) in pkgutil.iter_modules([here]):
        yield importlib.import_module('{}.criteria.{}'.format(__package__, module_name))


def discover():
    '''Map each criterion name to its class.'''
    found = {}
    for module in criterion_modules():
        cls = getattr(module, 'criterion', None)
        if cls is None:
            continue
        if cls.name in found:
            raise ConsistencyError('criterion {!r} defined twice ({} and {})'.format(
                cls.name, found[cls.name].__module__, module.__name__))
        found[cls.name] = cls
    return found
