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

from fermbezzle.builtin import linalg, randomnumbers, hopping, spectral, toeplitz, essspec
from fermbezzle.builtin import quasifree, finchain, embezzle

from fermbezzle.builtin.base import Command
from fermbezzle.core.definitions import definitions

modules = [linalg, randomnumbers, hopping, spectral, toeplitz, essspec, quasifree, finchain, embezzle]

commands = {}
commands_by_module = {}

def is_command(var):
    if var == Command:
        return True
    if hasattr(var, '__bases__'):
        return any(is_command(base) for base in var.__bases__)
    return False

for module in modules:
    commands_by_module[module.__name__] = []
    for name in dir(module):
        var = getattr(module, name)
        if hasattr(var, '__module__') and var.__module__ == module.__name__ and \
                is_command(var) and not name.startswith('_'):
            instance = var()
            commands[instance.get_name()] = instance
            commands_by_module[module.__name__].append(instance)

def get_module_doc(module):
    doc = module.__doc__
    if doc is not None:
        doc = doc.strip()
    if doc:
        title = doc.splitlines()[0]
        text = '\n'.join(doc.splitlines()[1:])
    else:
        title = module.__name__
        if title.startswith('fermbezzle.builtin.'):
            title = title[len('fermbezzle.builtin.'):]
        title = title.capitalize()
        text = ''
    return title, text

def contribute(definitions):
    for module in modules:
        definitions.contribute(module)

contribute(definitions)
