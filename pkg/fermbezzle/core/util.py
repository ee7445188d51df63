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

import os
import re
import tempfile
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

FORMAT_RE = re.compile(r'\`(\d*)\`')
GEOMETRIC_RE = re.compile(r'^\s*(\d+)\s*:\s*(\d+)\s*:\s*x\s*(\d+)\s*$')
ARITHMETIC_RE = re.compile(r'^\s*(\d+)\s*:\s*(\d+)\s*:\s*\+\s*(\d+)\s*$')

def interpolate_string(text, args):
    """
    >>> interpolate_string("Offset `1` exceeds radius `2`.", ['7', '3'])
    'Offset 7 exceeds radius 3.'
    >>> interpolate_string("`` and ``", ['a', 'b'])
    'a and b'
    """

    index = [1]

    def repl(match):
        arg = match.group(1)
        if arg == '' or arg == '0':
            arg = index[0]
        else:
            arg = int(arg)
        index[0] += 1
        if 1 <= arg <= len(args):
            return args[arg - 1]
        return ''
    return FORMAT_RE.sub(repl, text)

def parse_schedule(text):
    """
    Parses a schedule of positive integers: 'a:b:x2' (geometric),
    'a:b:+s' (arithmetic) or a comma separated list. Returns None for
    anything else.

    >>> parse_schedule('8:256:x2')
    [8, 16, 32, 64, 128, 256]
    >>> parse_schedule('16:40:+8')
    [16, 24, 32, 40]
    >>> parse_schedule('2, 3,4')
    [2, 3, 4]
    >>> parse_schedule('8:x2') is None
    True
    """

    m = GEOMETRIC_RE.match(text)
    if m is not None:
        start, stop, factor = [int(g) for g in m.groups()]
        if start < 1 or factor < 2:
            return None
        result = []
        value = start
        while value <= stop:
            result.append(value)
            value *= factor
        return result
    m = ARITHMETIC_RE.match(text)
    if m is not None:
        start, stop, step = [int(g) for g in m.groups()]
        if step < 1:
            return None
        return list(range(start, stop + 1, step))
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        return None

def parse_floats(text):
    """
    >>> parse_floats('0.3,0.1, 0.03')
    [0.3, 0.1, 0.03]
    >>> parse_floats('a') is None
    True
    """

    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        return None

def format_float(value):
    " Fixed, locale independent representation for CSV bodies "

    return '%.12g' % value

@contextmanager
def staged_files(filenames):
    """
    Yields one temporary file name per target, each in its target's
    directory. They replace their targets once the block completes;
    if it raises, every temporary file is removed and no target is
    touched.

    >>> folder = tempfile.mkdtemp()
    >>> targets = [os.path.join(folder, name) for name in ('a.txt', 'b.txt')]
    >>> with staged_files(targets) as paths:
    ...     for path in paths:
    ...         with open(path, 'w') as handle:
    ...             _ = handle.write('x')
    >>> sorted(os.listdir(folder))
    ['a.txt', 'b.txt']
    """

    staged = []
    try:
        for filename in filenames:
            directory = os.path.dirname(os.path.abspath(filename))
            if not os.path.exists(directory):
                os.makedirs(directory)
            fd, tmp_name = tempfile.mkstemp(dir=directory, prefix='.tmp-',
                suffix=os.path.basename(filename))
            os.close(fd)
            staged.append(tmp_name)
        yield list(staged)
        for tmp_name, filename in zip(staged, filenames):
            os.replace(tmp_name, filename)
    except BaseException:
        for tmp_name in staged:
            if os.path.exists(tmp_name):
                os.remove(tmp_name)
        raise

def parallel_map(function, items, jobs=1):
    """
    Ordered map over `items` on a pool of `jobs` threads.

    >>> parallel_map(lambda x: x * x, [3, 1, 2], jobs=2)
    [9, 1, 4]
    """

    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, items))
