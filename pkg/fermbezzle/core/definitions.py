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

GENERAL_MESSAGES = {
    'field': "Invalid value `2` for option `1`.",
    'nomodel': "No model given; use --model FILE or --model zoo:NAME.",
    'nofile': "Cannot read model file `1`.",
    'json': "Model file `1` is not valid JSON: `2`.",
    'linalg': "Eigensolver failed in `1`: `2`.",
    'unknown': "Unknown command `1`.",
    'internal': "Internal error in `1`: `2`.",
}

class Definitions(object):
    """
    Registry of message templates, keyed by symbol and tag.

    >>> definitions = Definitions()
    >>> definitions.add_messages('Demo', {'bad': "Bad value `1`."})
    >>> definitions.get_message('Demo', 'bad')
    'Bad value `1`.'
    >>> definitions.get_message('Demo', 'field')
    'Invalid value `2` for option `1`.'
    >>> definitions.get_message('Demo', 'missing')
    'Message Demo::missing not found.'
    """

    def __init__(self):
        super(Definitions, self).__init__()
        self.messages = {'General': dict(GENERAL_MESSAGES)}

    def add_messages(self, symbol, messages):
        existing = self.messages.setdefault(symbol, {})
        existing.update(messages)

    def get_message(self, symbol, tag):
        text = self.messages.get(symbol, {}).get(tag)
        if text is None:
            text = self.messages['General'].get(tag)
        if text is None:
            text = "Message %s::%s not found." % (symbol, tag)
        return text

    def contribute(self, module):
        """
        Collects the `messages` tables of the classes and functions
        defined in `module`, and the module level `messages` table
        mapping symbols to tables.
        """

        for name in dir(module):
            if name.startswith('_'):
                continue
            var = getattr(module, name)
            if getattr(var, '__module__', None) != module.__name__:
                continue
            table = getattr(var, 'messages', None)
            if isinstance(table, dict) and table:
                symbol = getattr(var, 'get_name', None)
                symbol = symbol() if callable(symbol) else var.__name__
                self.add_messages(symbol, table)
        module_table = getattr(module, 'messages', None)
        if isinstance(module_table, dict):
            for symbol, table in module_table.items():
                self.add_messages(symbol, table)

definitions = Definitions()
