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

from contextlib import contextmanager
from springerk import springerk, tableaux
from tempfile import NamedTemporaryFile


@contextmanager
def TempConfig(config_text=''):
    with NamedTemporaryFile(mode='w+', suffix='.conf') as temp_config:
        temp_config.write(config_text)
        temp_config.flush()
        yield temp_config


def run_springerk(args):
    return springerk.main(args)


def tab(text):
    '''Standard tableau if the columns increase, else row-standard.'''
    t = tableaux.parse_tableau(text)
    return tableaux.as_standard(t) if tableaux.is_standard(t) else t
