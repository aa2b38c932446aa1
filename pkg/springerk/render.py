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

import jinja2

from .util import INFINITY


TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), 'templates')


def _filter_wire(value):
    return str(value)


def _filter_cell(value, width=2):
    if value is None:
        return '.'.rjust(width)
    if value == INFINITY:
        return '∞'.rjust(width)
    return str(value).rjust(width)


def _filter_yesno(value):
    return 'true' if value else 'false'


jinja2_env = jinja2.Environment(trim_blocks=True, lstrip_blocks=True)
jinja2_env.filters['wire'] = _filter_wire
jinja2_env.filters['cell'] = _filter_cell
jinja2_env.filters['yesno'] = _filter_yesno


def template_path(name):
    return os.path.join(TEMPLATE_DIR, name)


def render_template(templatefile, context):
    with open(templatefile, 'r') as f:
        s = f.read()
    t = jinja2_env.from_string(s)
    return t.render(context)


def render_meander_svg(meander, spacing=40, template_file=None):
    n = meander.top.n
    radius = max([(b - a) * spacing / 2 for (a, b) in meander.top.arcs + meander.bottom.arcs] or [0])
    baseline = radius + spacing
    def arc(a, b):
        return {'x1': a * spacing, 'x2': b * spacing, 'r': (b - a) * spacing / 2}
    context = {
        'width': (n + 1) * spacing,
        'height': 2 * baseline,
        'baseline': baseline,
        'points': [{'label': x, 'x': x * spacing} for x in range(1, n + 1)],
        'top': [arc(a, b) for (a, b) in meander.top.arcs],
        'bottom': [arc(a, b) for (a, b) in meander.bottom.arcs],
        }
    return render_template(template_file or template_path('meander.svg'), context)


def render_graph_dot(graph, name='intersections', template_file=None):
    nodes = sorted(graph.nodes())
    edges = sorted(tuple(sorted((u, v))) + (data.get('codim_one', False),)
                   for (u, v, data) in graph.edges(data=True))
    context = {'name': name, 'nodes': nodes, 'edges': edges}
    return render_template(template_file or template_path('graph.dot'), context)


def render_trace(trace, template_file=None):
    width = len(str(trace.t.n)) + 1
    steps = []
    for (i, (grid, aux)) in enumerate(zip(trace.steps, trace.aux), 1):
        lines = [''.join(_filter_cell(x, width) for x in row) for row in grid]
        if trace.family == 'two_column':
            lines = ['{}   f={}'.format(line, _filter_cell(f, width)) for (line, f) in zip(lines, aux)]
        steps.append({
            'i': i,
            'lines': lines,
            'coincide': aux if trace.family == 'hook' else None,
            })
    context = {'trace': trace, 'steps': steps, 'outcome': trace.outcome}
    return render_template(template_file or template_path('trace.txt'), context)


def render_report(reports, remark_ok=None, template_file=None):
    context = {
        'reports': reports,
        'remark_ok': remark_ok,
        'ok': all(r.ok for r in reports) and remark_ok is not False,
        }
    return render_template(template_file or template_path('report.txt'), context)
