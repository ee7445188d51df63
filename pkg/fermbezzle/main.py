# -*- coding: utf8 -*-

u"""
    fermbezzle: embezzlement and factor types of free-fermion chains
    Copyright (C) 2024 The fermbezzle developers

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""

import sys
import traceback

from fermbezzle import settings
from fermbezzle import get_version_string
from fermbezzle.builtin import commands, commands_by_module, get_module_doc, modules
from fermbezzle.builtin.base import write_artifacts
from fermbezzle.core.evaluation import AbortInterrupt, Evaluation, MessageException

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_ABORTED = 130

def to_output(text):
    return '\n . '.join(text.splitlines())

def usage():
    lines = [u"usage: fermbezzle COMMAND [options]", u"", u"Commands:"]
    for module in modules:
        if not commands_by_module[module.__name__]:
            continue
        title, text = get_module_doc(module)
        lines.append(u"  %s" % title)
        for command in commands_by_module[module.__name__]:
            lines.append(u"    %-16s %s" % (command.get_name(), command.get_summary()))
    lines.append(u"")
    lines.append(u"Run 'fermbezzle COMMAND --help' for the options of a command.")
    return '\n'.join(lines)

def run(name, args, evaluation):
    """
    Resolves the options of command `name`, runs it and writes its
    artifacts, all of them or none. Returns the exit status.
    """

    command = commands.get(name)
    if command is None:
        evaluation.message('General', 'unknown', name)
        return EXIT_INVALID
    try:
        config = command.resolve(args, evaluation)
        result = command.run(config, evaluation)
        write_artifacts(result.artifacts, config)
    except AbortInterrupt:
        return EXIT_INVALID
    except MessageException as exc:
        evaluation.message_from(exc)
        return exc.exit_code
    except KeyboardInterrupt:
        raise
    except Exception as exc:
        if settings.PROPAGATE_EXCEPTIONS:
            raise
        if settings.DEBUG:
            traceback.print_exc()
        evaluation.message('General', 'internal', name, u'%s: %s' % (type(exc).__name__, exc))
        return EXIT_NUMERICAL
    print(result.summary)
    return EXIT_OK

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    if not argv or argv[0] in ('-h', '--help', 'help'):
        print(usage())
        return EXIT_OK
    if argv[0] == '--version':
        print(get_version_string(False))
        return EXIT_OK

    def out_callback(out):
        sys.stderr.write(to_output(u'%s' % out) + '\n')

    evaluation = Evaluation(out_callback=out_callback)
    try:
        return run(argv[0], argv[1:], evaluation)
    except KeyboardInterrupt:
        sys.stderr.write("\nAborted.\n")
        return EXIT_ABORTED

__test__ = {
    'cli': """
    Commands write their artifacts and report invalid input with exit
    code 2.

    >>> import json, os, tempfile
    >>> folder = tempfile.mkdtemp()
    >>> path = os.path.join(folder, 'criticality.json')
    >>> evaluation = Evaluation()
    >>> run('criticality', ['--model', 'zoo:gapless_diag', '--output', path], evaluation)
    gapless_diag: not critical
    0
    >>> with open(path) as handle:
    ...     data = json.load(handle)
    >>> data['critical'], data['config']['seed'], data['version'] == settings.VERSION
    (False, 0, True)
    >>> run('modes', ['--model', 'zoo:XX', '--n', '-4'], evaluation)
    2
    >>> print(evaluation.get_messages()[-1])
    General::field: Invalid value -4 for option n.
    >>> run('modes', ['--n', '4'], evaluation)
    2
    >>> print(evaluation.get_messages()[-1])
    General::nomodel: No model given; use --model FILE or --model zoo:NAME.
    >>> run('braid', [], evaluation)
    2
    """,

    'numerical': """
    A projector symbol with more discontinuities than the scan admits
    ends with exit code 3 and leaves no artifact behind.

    >>> import json, os, tempfile
    >>> folder = tempfile.mkdtemp()
    >>> model = os.path.join(folder, 'cos40.json')
    >>> with open(model, 'w') as handle:
    ...     json.dump({'bands': 1, 'name': 'cos40',
    ...         'coefficients': {'-40': [[[1, 0]]], '40': [[[1, 0]]]}}, handle)
    >>> evaluation = Evaluation()
    >>> output = os.path.join(folder, 'criticality.json')
    >>> run('criticality', ['--model', model, '--output', output], evaluation)
    3
    >>> print(evaluation.get_messages()[-1])
    detect_discontinuities::toomany: Found ... discontinuities (limit 64); the projector symbol does not look piecewise continuous.
    >>> os.path.exists(output)
    False
    """,

    'determinism': """
    Two scans with the same configuration have identical CSV bodies.

    >>> import os, tempfile
    >>> folder = tempfile.mkdtemp()
    >>> bodies = []
    >>> for name in ('first.csv', 'second.csv'):
    ...     args = ['--model', 'zoo:XX', '--lengths', '8:32:x2', '--dims', '2,3',
    ...         '--output', os.path.join(folder, name)]
    ...     status = run('embezzle-scan', args, Evaluation())  # doctest: +ELLIPSIS
    ...     with open(os.path.join(folder, name)) as handle:
    ...         bodies.append([line for line in handle if not line.startswith('#')])
    XX: 6 rows (max-ent); ...
    XX: 6 rows (max-ent); ...
    >>> bodies[0] == bodies[1], bodies[0][0].strip()
    (True, 'n,d,policy,epsilon,uncertainty,bipartite_bound,mesh,kernel_dimension,nonmonotone')
    >>> os.path.exists(os.path.join(folder, 'first.thresholds.json'))
    True
    """,
}

if __name__ == '__main__':
    sys.exit(main())
