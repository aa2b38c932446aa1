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

"""Generic membership criterion facilities.

Includes the Criterion base class.
"""

from .diagrams import classify
from . import membership


class Criterion(object):

    """Base class for membership deciders.

    Any new criterion should inherit from Criterion and at least override
    evaluate() and the 'name' and 'families' properties.

    """

    """Name for this criterion, used on the command line and in the config.

    All criterion names must be unique, thus subclasses must override this
    property.
    """
    name = None

    """Shape families this criterion can decide.

    A subset of ('hook', 'two_row', 'two_column'). decide() refuses shapes
    outside every listed family.
    """
    families = ()

    def __init__(self, config=None):
        """Initialize Criterion object.

        config is the configuration mapping; subclasses may read their own
        keys from it.
        """
        self.config = config or {}

    def applies_to(self, shape):
        family = classify(shape)
        return any(getattr(family, name) for name in self.families)

    def decide(self, tau, t):
        """Decide whether tau lies in the component of t.

        Return a membership.MembershipVerdict.

        Arguments:
        tau -- RowStandardTableau
        t -- StandardTableau of the same shape

        In the default implementation, this method does these things:
        1. Check that tau and t share a shape (membership.common_shape())
        2. Refuse general shapes (membership.applicable_families())
        3. Refuse shapes in none of self.families
        4. Return self.evaluate(tau, t)
        """
        t = membership.common_shape(tau, t)
        membership.applicable_families(t.shape)
        if not self.applies_to(t.shape):
            raise ValueError('criterion {} does not apply to shape {}'.format(self.name, t.shape))
        return self.evaluate(tau, t)

    def evaluate(self, tau, t):
        """Return a MembershipVerdict for a pair already checked by decide().

        In the base Criterion class, this method raises NotImplementedError,
        so it must be overridden in a subclass.
        """
        raise NotImplementedError
