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

import os
import re

from . import util

DEFAULT_CONFIG = """\
# springerk configuration
#
# Lines are 'key = value'. $(NAME) is replaced by the environment
# variable NAME (empty if unset).

# Criterion used by 'springerk member' when --criterion is not given.
# One of the names listed by 'springerk criteria', or 'all'.
default_criterion = dominance

# Largest box count swept by 'springerk cross-validate --max-boxes'.
max_boxes = 8

# Two-row shapes are swept further for the intersection checks.
max_boxes_two_row = 10

# Worker processes for cross-validation (1 = run in-process).
workers = 1

# Print one progress line per check to stderr.
echo = False

############
# Rendering
############

# Horizontal distance between meander points in SVG output.
svg_spacing = 40

# Relative --svg and --dot paths are resolved against this directory.
output_dir = $(PWD)

"""

XDG_CONFIG_HOME = os.environ.get('XDG_CONFIG_HOME', os.path.expanduser('~/.config'))

# key -> parser; every key here must parse for 'configtest' to pass
VALIDATORS = {
    'default_criterion': util.nonempty_str,
    'max_boxes': lambda s: util.int_from_str(s, minimum=1),
    'max_boxes_two_row': lambda s: util.int_from_str(s, minimum=1),
    'workers': lambda s: util.int_from_str(s, minimum=1),
    'echo': util.bool_from_str,
    'svg_spacing': lambda s: util.int_from_str(s, minimum=1),
    'output_dir': str,
    }

INTERPOLATION = re.compile(r'\$\(([A-Za-z_][A-Za-z0-9_]*)\)')


def interpolate(text, environ=None):
    '''Replace each $(NAME) in text by the environment variable NAME.'''
    environ = os.environ if environ is None else environ
    return INTERPOLATION.sub(lambda m: environ.get(m.group(1), ''), text)


def parse_lines(lines):
    '''Parse 'key = value' lines into a dict. Blank lines and '#' comments
    are skipped; a later key overrides an earlier one.'''
    values = {}
    for (lineno, line) in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith('#'):
            continue
        key, sep, value = text.partition('=')
        if not sep or not key.strip():
            raise ValueError('malformed config line {}: {!r}'.format(lineno, text))
        values[key.strip()] = interpolate(value.strip())
    return values


class Config(object):

    def __init__(self, config_home=None):
        self.config_home = config_home or os.path.join(XDG_CONFIG_HOME, 'springerk')
        self.file_location = os.path.join(self.config_home, 'springerk.conf')
        self.config = parse_lines(DEFAULT_CONFIG.splitlines())

    def get_from_file(self, f):
        return parse_lines(f)

    def make_config_dirs(self):
        target = os.path.dirname(os.path.abspath(self.file_location))
        if not os.path.isdir(target):
            os.makedirs(target)

    def create_local_config(self, overwrite=True):
        '''Write DEFAULT_CONFIG to file_location. Return False if the file
        exists and overwrite is off.'''
        if not overwrite and os.path.exists(self.file_location):
            return False
        self.make_config_dirs()
        with open(self.file_location, 'w') as f:
            f.write(DEFAULT_CONFIG)
        return True

    def update_config(self):
        '''Overlay the file at file_location, if there is one.'''
        if os.path.isfile(self.file_location):
            with open(self.file_location) as f:
                self.config.update(parse_lines(f))

    def dump_to_file(self, fileobj):
        fileobj.writelines('{} = {}\n'.format(key, self.config[key])
                           for key in sorted(self.config))

    def value(self, key):
        '''Parsed value of a known key; ValueError if it does not parse.'''
        return VALIDATORS[key](self.config[key])

    def get_bool(self, key):
        return bool(self.value(key))

    def get_int(self, key):
        return int(self.value(key))

    def check(self):
        '''Yield (key, error message or None) for every known key.'''
        for key in sorted(VALIDATORS):
            if key not in self.config:
                yield key, 'missing'
                continue
            try:
                self.value(key)
            except ValueError as ex:
                yield key, str(ex)
            else:
                yield key, None
