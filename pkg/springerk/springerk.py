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

'''Usage:
{0} batch [-c NAME] [-f FILE] (BATCH-FILE)
{0} configtest [-f FILE]
{0} construct [-f FILE] [-F FAMILY] [-t FILE] [--trace] --tau=TAU --T=T
{0} counterexample [-f FILE] --shape=SHAPE
{0} criteria [-f FILE]
{0} cross-validate [-f FILE] [-t FILE] [-w N] [--max-boxes-two-row=N]
    [--shape=SHAPE | --max-boxes=N]
{0} enumerate [-f FILE] [--standard | --row-standard | --k-pairs] --shape=SHAPE
{0} graph [-f FILE] [--dot=PATH] --shape=SHAPE
{0} intersect [-f FILE] [-F FAMILY] --T=T --S=S
{0} meander [-f FILE] [--svg=PATH] --T=T --S=S
{0} member [-c NAME] [-f FILE] --tau=TAU --T=T
{0} newconfig [-f FILE]
{0} rho [-f FILE] (LENGTH)
{0} schuetzenberger [-f FILE] --T=T
{0} vogan [-f FILE] --shape=SHAPE
{0} (--help | --version)

Commands:
  batch           Decide membership for every "tau|T" line of a file
  configtest      Check configuration
  construct       Run the construction algorithm for tau against T
  counterexample  Print a pair with tau dominated by T although the flag of
                    tau is not in the component of T
  criteria        List available membership criteria
  cross-validate  Check that all criteria agree on one shape, or on every
                    hook, two-row and two-column shape up to a box count
  enumerate       List the standard or row-standard tableaux of a shape, or
                    all member pairs
  graph           Intersection graph of the components of a shape (DOT)
  intersect       Classify the intersection of the components of T and S
  meander         Meander of two two-row tableaux
  member          Decide whether the flag of tau lies in the component of T
  newconfig       Create a copy of the default configuration at
                    $XDG_CONFIG_HOME/springerk/springerk.conf
                    (overwrite existing config)
  rho             List the double sequences of the given length
  schuetzenberger Schuetzenberger involution of a standard tableau
  vogan           Pairs of tableaux obtained from the Vogan transformations

Options:
  -c, --criterion=NAME        Criterion to use, or 'all' to run every one
                                and demand agreement; the verdict then
                                names them joined by '=', e.g. "true
                                (dominance=hook_A=constructible)"
                                ('{0} criteria' to see choices; otherwise
                                use the configured default)
  -F, --family=FAMILY         Force the shape family: hook, two_row or
                                two_column (otherwise detect it)
  -f, --config=FILE           Alternate config file
  -t, --template-file=FILE    Template to use for trace or report output
  -w, --workers=N             Worker processes for cross-validation
                                (otherwise use the configured value)
  --tau=TAU                   Row-standard tableau, rows separated by '/'
                                and entries by ',' (e.g. 2,3,5/4/1)
  --T=T                       Standard tableau
  --S=S                       Standard tableau of the same shape as T
  --shape=SHAPE               Row lengths separated by ',' (e.g. 3,1,1)
  --max-boxes=N               Check every family shape with at most N boxes
  --max-boxes-two-row=N       Box bound for two-row shapes (otherwise the
                                larger of N and the configured value)
  --trace                     Print every intermediate grid
  --svg=PATH                  Also write the meander as SVG
  --dot=PATH                  Write the graph to PATH instead of stdout
  --standard                  Standard tableaux (default)
  --row-standard              Row-standard tableaux
  --k-pairs                   Pairs (tau, T) with tau a member for T

Exit status is 0 on success, 1 if 'member' or 'batch' decides false, 2 on
bad input and 3 if a validation fails or two criteria disagree.

Report bugs to <springerk-dev@lists.sourceforge.net>.
'''

from __future__ import print_function

import os
import sys

import docopt

__version__ = '0.3.0'


from . import configtools
from . import constructibility
from . import discover
from . import jdt
from . import meanders
from . import membership
from . import oracle
from . import render
from . import tableaux
from . import util
from . import vogan
from .diagrams import parse_shape

# 'all' runs these first, then any other discovered criteria by name
CRITERION_ORDER = ('dominance', 'inductive', 'construct')


def print_hr():
    print('\n' + 79 * '-' + '\n')


def msg(text, **kwargs):
    print('springerk' + ': ' + text, **kwargs)
    sys.stdout.flush()


def errmsg(text, **kwargs):
    print('springerk' + ': ' + text, file=sys.stderr, **kwargs)
    sys.stdout.flush()


def yesno(value):
    return 'true' if value else 'false'


def output_path(config, path):
    return os.path.join(config.config.get('output_dir') or os.getcwd(), path)


def select_decider(criteria, name, config):
    '''Return a decide(tau, t) callable for the named criterion or 'all'.'''
    if name != 'all':
        try:
            return criteria[name](config.config).decide
        except KeyError:
            raise ValueError("'{}' is not a known criterion".format(name))
    names = [n for n in CRITERION_ORDER if n in criteria]
    names += sorted(n for n in criteria if n not in CRITERION_ORDER)
    deciders = [criteria[n](config.config) for n in names]

    def decide(tau, t):
        verdicts = [d.decide(tau, t) for d in deciders]
        label = '='.join(v.criterion for v in verdicts)
        if len(set(v.member for v in verdicts)) != 1:
            raise util.ConsistencyError('criteria disagree on {}|{}: {}'.format(
                tau, t, ', '.join('{}={}'.format(v.criterion, yesno(v.member)) for v in verdicts)))
        return membership.MembershipVerdict(verdicts[0].member, label, None)
    return decide


def format_verdict(verdict):
    text = '{} ({})'.format(yesno(verdict.member), verdict.criterion)
    if verdict.witness is not None:
        text += ' witness={}'.format(verdict.witness)
    return text


def format_cell(value):
    return '-' if value is None else str(value)


def do_configtest(config, criteria):
    print_hr()
    print('Config location:')
    if os.path.exists(config.file_location):
        print(config.file_location)
    else:
        print(config.file_location + ' (not present)')
    print_hr()
    print('Effective configuration:\n')
    print('# begin springerk config\n')
    config.dump_to_file(sys.stdout)
    print('\n# end springerk config')
    print_hr()
    print('Testing configuration values...')
    ok = True
    for (key, error) in config.check():
        if error is None and key == 'default_criterion':
            name = config.config[key]
            if name != 'all' and name not in criteria:
                error = "'{}' is not a known criterion".format(name)
        print(key + '...', end='')
        if error is None:
            print('ok.')
        else:
            print(error + '.')
            ok = False
    return 0 if ok else 2


def do_cross_validate(argv, config):
    progress = errmsg if config.get_bool('echo') else None
    template_file = argv['--template-file']
    if argv['--shape']:
        shape = parse_shape(argv['--shape'])
        reports = [oracle.cross_validate(shape, progress=progress)]
        remark_ok = None
    else:
        max_boxes = util.int_from_str(argv['--max-boxes'] or config.config['max_boxes'], minimum=1)
        if argv['--max-boxes-two-row']:
            two_row = util.int_from_str(argv['--max-boxes-two-row'], minimum=1)
        else:
            two_row = max(max_boxes, config.get_int('max_boxes_two_row'))
        if argv['--workers']:
            workers = util.int_from_str(argv['--workers'], minimum=1)
        else:
            workers = config.get_int('workers')
        reports, remark_ok = oracle.validate_all(max_boxes, two_row, workers=workers,
                                                 progress=progress)
    print(render.render_report(reports, remark_ok, template_file))
    if all(r.ok for r in reports) and remark_ok is not False:
        return 0
    return 3


def do_batch(path, decide):
    with open(path) as f:
        results = oracle.evaluate_batch(f, decide)
    for result in results:
        print('{}|{}: {}'.format(result.tau, result.t, yesno(result.verdict.member)))
    return 0 if all(r.verdict.member for r in results) else 1


def write_output(config, path, text):
    path = output_path(config, path)
    with open(path, 'w') as f:
        f.write(text if text.endswith('\n') else text + '\n')
    errmsg('wrote {}'.format(path))


def run(argv, config, criteria):
    tau = tableaux.parse_tableau(argv['--tau']) if argv['--tau'] else None
    t = tableaux.parse_standard(argv['--T']) if argv['--T'] else None
    s = tableaux.parse_standard(argv['--S']) if argv['--S'] else None
    shape = parse_shape(argv['--shape']) if argv['--shape'] else None
    family = argv['--family']

    if argv['configtest']:
        return do_configtest(config, criteria)

    elif argv['newconfig']:
        try:
            config.create_local_config()
        except EnvironmentError as e:
            errmsg('failed to write config file to {}: {}'.format(config.file_location, e.strerror))
            return 2
        else:
            msg('wrote config file to {}'.format(config.file_location))
            return 0

    elif argv['criteria']:
        default = config.config['default_criterion']
        for name in sorted(criteria):
            if name == default:
                print(name + ' [default]')
            else:
                print(name)
        return 0

    elif argv['member']:
        name = argv['--criterion'] or config.config['default_criterion']
        verdict = select_decider(criteria, name, config)(tau, t)
        print(format_verdict(verdict))
        return 0 if verdict.member else 1

    elif argv['batch']:
        name = argv['--criterion'] or config.config['default_criterion']
        return do_batch(argv['BATCH-FILE'], select_decider(criteria, name, config))

    elif argv['construct']:
        trace = constructibility.construct(tau, t, family)
        if argv['--trace']:
            print(render.render_trace(trace, argv['--template-file']), end='')
        elif trace.outcome.success:
            print('constructible')
        else:
            print('fails at step {} ({})'.format(trace.outcome.step, trace.outcome.kind))

    elif argv['meander']:
        m = meanders.meander(t, s)
        print(meanders.summary(m, meanders.intersection_2row(t, s).codim_one))
        if argv['--svg']:
            svg = render.render_meander_svg(m, config.get_int('svg_spacing'))
            write_output(config, argv['--svg'], svg)

    elif argv['intersect']:
        if family:
            classifiers = dict(meanders.CLASSIFIERS)
            if family not in classifiers:
                raise ValueError('unknown shape family {!r}'.format(family))
            result = classifiers[family](t, s)
            families = (family,)
        else:
            result = meanders.classify_intersection(t, s)
            families = result.families
        print('nonempty={} dim={} codim={} codim1={} ({})'.format(
            yesno(result.nonempty), format_cell(result.dim), format_cell(result.codim),
            yesno(result.codim_one), ','.join(families)))

    elif argv['vogan']:
        for pair in vogan.vogan_set(shape):
            print('{} <-> {}'.format(pair.first, pair.second))

    elif argv['enumerate']:
        if argv['--k-pairs']:
            for (tau, t) in oracle.k_pairs(shape):
                print('{}|{}'.format(tau, t))
        elif argv['--row-standard']:
            for tab in oracle.enumerate_row_standard(shape):
                print(tab)
        else:
            for tab in oracle.enumerate_standard(shape):
                print(tab)

    elif argv['cross-validate']:
        return do_cross_validate(argv, config)

    elif argv['schuetzenberger']:
        print(jdt.schuetzenberger(t))

    elif argv['graph']:
        dot = render.render_graph_dot(oracle.intersection_graph(shape))
        if argv['--dot']:
            write_output(config, argv['--dot'], dot)
        else:
            print(dot)

    elif argv['counterexample']:
        tau, t = oracle.r_minus_k_pair(shape)
        print('{}|{}'.format(tau, t))
        print('dominance={}'.format(yesno(membership.dominance_member(tau, t).member)))

    elif argv['rho']:
        for rho in oracle.enumerate_rho(util.int_from_str(argv['LENGTH'], minimum=1)):
            print(' '.join('({},{})'.format(i, j) for (i, j) in rho.pairs))

    return 0


def main(sysargv=None):
    argv = docopt.docopt(
        doc=__doc__.format(os.path.basename(sys.argv[0])),
        argv=sysargv,
        version=__version__
        )
    alt_config_path = argv['--config']

    # Configuration and criterion discovery
    config = configtools.Config()
    criteria = discover.discover()

    # Pull from alternate config file if specified
    if alt_config_path:
        try:
            # if creating new, don't care if it already exists or not
            if not argv['newconfig']:
                with open(alt_config_path) as _:
                    pass
        except EnvironmentError as ex:
            errmsg('{}: {}'.format(alt_config_path, ex.strerror))
            return 2
        config.file_location = alt_config_path

    try:
        config.update_config()
        return run(argv, config, criteria)
    except util.ConsistencyError as ex:
        errmsg('consistency check failed: {}'.format(ex))
        return 3
    except ValueError as ex:
        errmsg(str(ex))
        return 2
    except EnvironmentError as ex:
        errmsg('{}: {}'.format(ex.filename, ex.strerror))
        return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
