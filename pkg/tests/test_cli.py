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

from pytest import raises

from .helpers import TempConfig, run_springerk

T = '1,2,4,6,7/3,5,8,9'
S = '1,2,5,6,7/3,4,8,9'


def test_member_all_criteria_agree(capsys):
    ret = run_springerk(['member', '--tau', '2,3,5/4/1', '--T', '1,3,4/2/5', '--criterion', 'all'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out == 'true (dominance=hook_A=constructible)\n'


def test_help_documents_all_label(capsys):
    with raises(SystemExit):
        run_springerk(['--help'])
    out, err = capsys.readouterr()
    assert "joined by '='" in out
    assert '(dominance=hook_A=constructible)' in out


def test_member_false_exits_one(capsys):
    ret = run_springerk(['member', '-c', 'construct', '--tau', '2,4,5/3/1', '--T', '1,3,4/2/5'])
    out, err = capsys.readouterr()
    assert ret == 1
    assert out == "false (constructible) witness=(4, 'first')\n"


def test_member_default_criterion(capsys):
    ret = run_springerk(['member', '--tau', '2,4,5/3/1', '--T', '1,3,4/2/5'])
    out, err = capsys.readouterr()
    assert ret == 1
    assert out.startswith('false (dominance) witness=')


def test_member_unknown_criterion(capsys):
    ret = run_springerk(['member', '-c', 'bogus', '--tau', '1,2', '--T', '1,2'])
    out, err = capsys.readouterr()
    assert ret == 2
    assert "'bogus' is not a known criterion" in err


def test_member_malformed_tableau(capsys):
    ret = run_springerk(['member', '--tau', '1,x/2', '--T', '1,2/3'])
    out, err = capsys.readouterr()
    assert ret == 2
    assert out == ''
    assert err.startswith('springerk: ')


def test_member_general_shape(capsys):
    ret = run_springerk(['member', '--tau', '1,2,5/4,6/3', '--T', '1,2,5/3,4/6'])
    out, err = capsys.readouterr()
    assert ret == 2
    assert 'general shapes' in err


def test_construct_outcomes(capsys):
    assert run_springerk(['construct', '--tau', '2,3,5/4/1', '--T', '1,3,4/2/5']) == 0
    assert run_springerk(['construct', '--tau', '2,4,5/3/1', '--T', '1,3,4/2/5']) == 0
    out, err = capsys.readouterr()
    assert out == 'constructible\nfails at step 4 (first)\n'


def test_construct_trace(capsys):
    ret = run_springerk(['construct', '--trace', '--tau', '2,4,5/3/1', '--T', '1,3,4/2/5'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out.startswith('hook construction of 2,4,5/3/1 from 1,3,4/2/5\n')
    assert out.endswith('fails at step 4 (first)\n')


def test_construct_family_override_refused(capsys):
    ret = run_springerk(['construct', '-F', 'hook', '--tau', '1,3/2,4', '--T', '1,2/3,4'])
    assert ret == 2


def test_meander_summary(capsys):
    ret = run_springerk(['meander', '--T', T, '--S', S])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out == 'even, loops=3, intervals=[2], codim1=true\n'


def test_meander_svg(capsys, tmpdir):
    with TempConfig('output_dir = {}\n'.format(tmpdir)) as tf:
        ret = run_springerk(['meander', '-f', tf.name, '--svg', 'm.svg', '--T', T, '--S', S])
    out, err = capsys.readouterr()
    path = os.path.join(str(tmpdir), 'm.svg')
    assert ret == 0
    assert err == 'springerk: wrote {}\n'.format(path)
    with open(path) as f:
        svg = f.read()
    assert svg.startswith('<?xml')
    assert svg.count('<circle') == 9


def test_intersect(capsys):
    ret = run_springerk(['intersect', '--T', T, '--S', S])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out == 'nonempty=true dim=3 codim=1 codim1=true (two_row)\n'


def test_intersect_unknown_family(capsys):
    ret = run_springerk(['intersect', '-F', 'three_row', '--T', T, '--S', S])
    out, err = capsys.readouterr()
    assert ret == 2
    assert "unknown shape family 'three_row'" in err


def test_vogan(capsys):
    ret = run_springerk(['vogan', '--shape', '5,4'])
    out, err = capsys.readouterr()
    assert ret == 0
    lines = out.splitlines()
    assert ('{} <-> {}'.format(T, S) in lines) or ('{} <-> {}'.format(S, T) in lines)


def test_enumerate(capsys):
    assert run_springerk(['enumerate', '--shape', '2,1']) == 0
    out, err = capsys.readouterr()
    assert sorted(out.splitlines()) == ['1,2/3', '1,3/2']
    assert run_springerk(['enumerate', '--row-standard', '--shape', '2,1']) == 0
    out, err = capsys.readouterr()
    assert len(out.splitlines()) == 3
    assert run_springerk(['enumerate', '--k-pairs', '--shape', '2,1']) == 0
    out, err = capsys.readouterr()
    lines = out.splitlines()
    assert len(lines) == 4
    assert '2,3/1|1,2/3' not in lines
    assert '1,2/3|1,3/2' not in lines


def test_schuetzenberger(capsys):
    ret = run_springerk(['schuetzenberger', '--T', '1,3,4/2,5,7/6'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out == '1,2,6/3,5,7/4\n'


def test_counterexample(capsys):
    ret = run_springerk(['counterexample', '--shape', '3,2,1'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out == '1,2,5/4,6/3|1,2,5/3,4/6\ndominance=true\n'


def test_rho(capsys):
    ret = run_springerk(['rho', '1'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out == '(0,0) (0,1)\n(1,1) (0,1)\n'


def test_rho_rejects_zero(capsys):
    assert run_springerk(['rho', '0']) == 2


def test_batch(capsys, tmpdir):
    batch = tmpdir.join('pairs.txt')
    batch.write('# hook pairs\n2,3,5/4/1|1,3,4/2/5\n\n2,4,5/3/1|1,3,4/2/5\n')
    ret = run_springerk(['batch', str(batch)])
    out, err = capsys.readouterr()
    assert ret == 1
    assert out == '2,3,5/4/1|1,3,4/2/5: true\n2,4,5/3/1|1,3,4/2/5: false\n'


def test_batch_all_true(capsys, tmpdir):
    batch = tmpdir.join('pairs.txt')
    batch.write('2,3,5/4/1|1,3,4/2/5\n1,3/2,4|1,2/3,4\n')
    assert run_springerk(['batch', '-c', 'all', str(batch)]) == 0


def test_batch_missing_file(capsys):
    ret = run_springerk(['batch', '/nonexistent/pairs.txt'])
    out, err = capsys.readouterr()
    assert ret == 2
    assert err.startswith('springerk: /nonexistent/pairs.txt: ')


def test_graph_stdout(capsys):
    ret = run_springerk(['graph', '--shape', '2,1'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out.startswith('graph intersections {\n')
    assert '"1,2/3" -- "1,3/2"' in out
    assert out.endswith('}\n')


def test_graph_dot_file(capsys, tmpdir):
    with TempConfig('output_dir = {}\n'.format(tmpdir)) as tf:
        ret = run_springerk(['graph', '-f', tf.name, '--dot', 'g.dot', '--shape', '2,1'])
    assert ret == 0
    with open(os.path.join(str(tmpdir), 'g.dot')) as f:
        dot = f.read()
    assert dot.startswith('graph intersections {')
    assert dot.endswith('}\n')


def test_cross_validate_shape(capsys):
    ret = run_springerk(['cross-validate', '--shape', '2,1'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert out.startswith('shape 2,1 (')
    assert out.endswith('all checks passed\n')
    assert 'remark check' not in out


def test_cross_validate_sweep(capsys):
    ret = run_springerk(['cross-validate', '--max-boxes', '3', '--max-boxes-two-row', '4'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert 'remark check on 1,2,5/3,4/6 and 1,2,5/3,6/4: ok' in out
    assert out.endswith('all checks passed\n')


def test_cross_validate_echo_progress(capsys):
    with TempConfig('echo = true\n') as tf:
        ret = run_springerk(['cross-validate', '-f', tf.name, '--shape', '2,1'])
    out, err = capsys.readouterr()
    assert ret == 0
    assert 'springerk: 2,1: enumeration (2 cases, 0 failures)\n' in err
