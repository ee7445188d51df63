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

import csv
import json
from optparse import OptionParser

from fermbezzle import settings
from fermbezzle.core.evaluation import ValidationError
from fermbezzle.core.util import format_float, parse_floats, parse_schedule, staged_files

def text(value):
    return value

def integer(value):
    return int(value)

def positive_integer(value):
    value = int(value)
    if value < 1:
        raise ValueError(value)
    return value

def real(value):
    return float(value)

def positive_real(value):
    value = float(value)
    if not value > 0:
        raise ValueError(value)
    return value

def schedule(value):
    """
    Nonempty, strictly ascending schedule of positive integers.

    >>> schedule('8:64:x2')
    [8, 16, 32, 64]
    >>> schedule('4,2')
    Traceback (most recent call last):
    ...
    ValueError: 4,2
    """

    result = parse_schedule(value)
    if not result or min(result) < 1 or any(a >= b for a, b in zip(result, result[1:])):
        raise ValueError(value)
    return result

def positive_reals(value):
    result = parse_floats(value)
    if not result or min(result) <= 0:
        raise ValueError(value)
    return result

def choice(*values):
    def convert(value):
        if value not in values:
            raise ValueError(value)
        return value
    convert.__name__ = 'choice'
    return convert

class RunConfig(object):
    """
    Resolved options of one command run.

    >>> config = RunConfig('modes', {'n': 64, 'cut': 'half', 'seed': 0})
    >>> config.n, config.get('topk', 4096)
    (64, 4096)
    >>> config.to_json()
    '{"command": "modes", "cut": "half", "n": 64, "seed": 0}'
    """

    def __init__(self, command, values):
        self.__dict__['command'] = command
        self.__dict__['values'] = dict(values)

    def __getattr__(self, name):
        try:
            return self.values[name]
        except KeyError:
            raise AttributeError(name)

    def __setattr__(self, name, value):
        raise AttributeError("RunConfig is immutable")

    def get(self, name, default=None):
        return self.values.get(name, default)

    def to_dict(self):
        data = {'command': self.command}
        data.update(self.values)
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def load_model(self):
        from fermbezzle.builtin.hopping import load_model

        if not self.get('model'):
            raise ValidationError('General', 'nomodel')
        return load_model(self.model)

class Artifact(object):
    def __init__(self, filename):
        self.filename = filename

    def header_lines(self, config):
        return [
            'fermbezzle %s' % settings.VERSION,
            'config: %s' % config.to_json(),
            'norm: %s' % settings.NORM_CONVENTION,
        ]

    def write_to(self, path, config):
        with open(path, 'w', newline='') as handle:
            self.dump(handle, config)

    def dump(self, handle, config):
        raise NotImplementedError

class CsvArtifact(Artifact):
    """
    Comma separated table whose body only depends on the rows; the
    version and the resolved config are written as leading comment
    lines.
    """

    def __init__(self, filename, columns, rows):
        super(CsvArtifact, self).__init__(filename)
        self.columns = columns
        self.rows = rows

    def dump(self, handle, config):
        for line in self.header_lines(config):
            handle.write('# %s\n' % line)
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_float(item) if isinstance(item, float) else item
                for item in row])

class PlotArtifact(CsvArtifact):
    " Whitespace separated columns for external plotting tools "

    def dump(self, handle, config):
        for line in self.header_lines(config):
            handle.write('# %s\n' % line)
        handle.write('# %s\n' % ' '.join(self.columns))
        for row in self.rows:
            handle.write(' '.join(format_float(float(item)) for item in row) + '\n')

class JsonArtifact(Artifact):
    def __init__(self, filename, data):
        super(JsonArtifact, self).__init__(filename)
        self.data = data

    def dump(self, handle, config):
        data = dict(self.data)
        data['version'] = settings.VERSION
        data['config'] = config.to_dict()
        data['norm_convention'] = settings.NORM_CONVENTION
        json.dump(data, handle, indent=2, sort_keys=True)
        handle.write('\n')

def write_artifacts(artifacts, config):
    " Writes every artifact, or none of them when one fails "

    artifacts = list(artifacts)
    with staged_files([artifact.filename for artifact in artifacts]) as paths:
        for artifact, path in zip(artifacts, paths):
            artifact.write_to(path, config)

class Result(object):
    def __init__(self, summary, artifacts=()):
        self.summary = summary
        self.artifacts = list(artifacts)

class Command(object):
    """
    A subcommand of the command line tool. Subclasses declare their
    options as {name: (default, converter, help)} and implement
    `apply(config, evaluation)`, returning a `Result`.
    """

    name = None
    options = {}
    messages = {}
    output = None

    common_options = {
        'output': (None, text, "artifact file name"),
        'seed': ('0', integer, "seed recorded in every artifact"),
        'jobs': (str(settings.JOBS), positive_integer, "number of worker threads"),
    }

    @classmethod
    def get_name(cls):
        if cls.name is None:
            return cls.__name__.lower()
        return cls.name

    def get_summary(self):
        doc = (self.__doc__ or '').strip()
        return doc.splitlines()[0] if doc else self.get_name()

    def get_options(self):
        options = dict(self.common_options)
        options['output'] = (self.output, text, options['output'][2])
        options.update(self.options)
        return options

    def get_parser(self):
        parser = OptionParser(usage='%%prog %s [options]' % self.get_name(),
            description=self.get_summary())
        for name, (default, convert, help) in sorted(self.get_options().items()):
            if default is not None:
                help = '%s [default: %s]' % (help, default)
            parser.add_option('--' + name, dest=name.replace('-', '_'), default=default,
                metavar=name.upper().replace('-', '_'), help=help)
        return parser

    def resolve(self, args, evaluation):
        """
        Parses command line arguments into a RunConfig; a malformed
        value emits General::field and aborts.
        """

        parser = self.get_parser()
        namespace, rest = parser.parse_args(args)
        if rest:
            evaluation.error('General', 'field', 'arguments', ' '.join(rest))
        values = {}
        for name, (default, convert, help) in self.get_options().items():
            key = name.replace('-', '_')
            raw = getattr(namespace, key)
            if raw is None:
                values[key] = None
                continue
            try:
                values[key] = convert(raw)
            except (TypeError, ValueError):
                evaluation.error('General', 'field', name, raw)
        config = RunConfig(self.get_name(), values)
        self.validate(config, evaluation)
        return config

    def validate(self, config, evaluation):
        pass

    def run(self, config, evaluation):
        return self.apply(config, evaluation)

    def apply(self, config, evaluation):
        raise NotImplementedError

    def derived_filename(self, config, suffix):
        " artifact name next to --output, e.g. scan.csv -> scan.thresholds.json "

        base = config.output
        if '.' in base.rsplit('/', 1)[-1]:
            base = base.rsplit('.', 1)[0]
        return base + suffix

__test__ = {
    'artifacts': """
    When one artifact fails to serialize, none of the files appears.

    >>> import os, tempfile
    >>> folder = tempfile.mkdtemp()
    >>> config = RunConfig('demo', {'seed': 0})
    >>> table = CsvArtifact(os.path.join(folder, 'table.csv'), ['n', 'value'], [(8, 0.5)])
    >>> broken = JsonArtifact(os.path.join(folder, 'table.json'), {'value': object()})
    >>> write_artifacts([table, broken], config)
    Traceback (most recent call last):
    ...
    TypeError: Object of type object is not JSON serializable
    >>> os.listdir(folder)
    []
    >>> write_artifacts([table], config)
    >>> os.listdir(folder)
    ['table.csv']
    >>> with open(os.path.join(folder, 'table.csv')) as handle:
    ...     print(handle.read().splitlines()[-1])
    8,0.5
    """,
}
