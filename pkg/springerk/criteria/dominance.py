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

from .. import criterionbase
from .. import membership


class Dominance(criterionbase.Criterion):
    """Quotient-shape dominance, valid on every family."""

    name = 'dominance'
    families = ('hook', 'two_row', 'two_column')

    def evaluate(self, tau, t):
        return membership.dominance_member(tau, t)

criterion = Dominance
