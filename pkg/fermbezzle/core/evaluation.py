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

from fermbezzle import settings
from fermbezzle.core.definitions import definitions as default_definitions
from fermbezzle.core.util import interpolate_string

class EvaluationInterrupt(Exception):
    pass

class AbortInterrupt(EvaluationInterrupt):
    pass

class MessageException(Exception):
    """
    An error carrying a message symbol, tag and arguments. The text is
    looked up in the message registry when the error is displayed.
    """

    exit_code = 3

    def __init__(self, symbol, tag, *args):
        super(MessageException, self).__init__(symbol, tag, *args)
        self.symbol = symbol
        self.tag = tag
        self.args_ = args

    def text(self, definitions=None):
        if definitions is None:
            definitions = default_definitions
        template = definitions.get_message(self.symbol, self.tag)
        return interpolate_string(template, [format_arg(arg) for arg in self.args_])

    def __str__(self):
        return u'%s::%s: %s' % (self.symbol, self.tag, self.text())

class ValidationError(MessageException, ValueError):
    exit_code = 2

class NumericalError(MessageException, ArithmeticError):
    exit_code = 3

def format_arg(arg):
    if isinstance(arg, float):
        return '%.10g' % arg
    return u'%s' % (arg,)

class Out(object):
    def __init__(self):
        self.is_message = False
        self.is_print = False
        self.text = ''

class Message(Out):
    def __init__(self, symbol, tag, text):
        super(Message, self).__init__()
        self.is_message = True
        self.symbol = symbol
        self.tag = tag
        self.text = text

    def __str__(self):
        return u'%s::%s: %s' % (self.symbol, self.tag, self.text)

    def __eq__(self, other):
        return self.is_message == other.is_message and self.text == other.text

class Print(Out):
    def __init__(self, text):
        super(Print, self).__init__()
        self.is_print = True
        self.text = text

    def __str__(self):
        return self.text

    def __eq__(self, other):
        return self.is_message == other.is_message and self.text == other.text

class Evaluation(object):
    """
    Run context of a command: collects messages and progress output
    and forwards them to `out_callback`.

    >>> evaluation = Evaluation()
    >>> evaluation.message('General', 'field', 'grid', -1)
    >>> print(evaluation.out[0])
    General::field: Invalid value -1 for option grid.
    >>> evaluation.quiet_messages.add(('General', 'field'))
    >>> evaluation.message('General', 'field', 'grid', -2)
    >>> len(evaluation.out)
    1
    """

    def __init__(self, definitions=None, out_callback=None):
        if definitions is None:
            definitions = default_definitions
        self.definitions = definitions
        self.out = []
        self.out_callback = out_callback
        self.quiet_all = False
        self.quiet_messages = set()

    def message(self, symbol, tag, *args):
        if (symbol, tag) in self.quiet_messages or self.quiet_all:
            return

        if settings.DEBUG_PRINT:
            print('MESSAGE: %s::%s (%s)' % (symbol, tag, args))

        template = self.definitions.get_message(symbol, tag)
        text = interpolate_string(template, [format_arg(arg) for arg in args])

        self.out.append(Message(symbol, tag, text))
        if self.out_callback:
            self.out_callback(self.out[-1])

    def message_from(self, exc):
        self.message(exc.symbol, exc.tag, *exc.args_)

    def print_out(self, text):
        self.out.append(Print(text))
        if self.out_callback:
            self.out_callback(self.out[-1])
        if settings.DEBUG_PRINT:
            print('OUT: ' + text)

    def error(self, symbol, tag, *args):
        self.message(symbol, tag, *args)
        raise AbortInterrupt

    def get_messages(self):
        return [out for out in self.out if out.is_message]
