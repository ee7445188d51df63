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

import doctest
import sys
from optparse import OptionParser

from fermbezzle import get_version_string, main as cli
from fermbezzle import settings
from fermbezzle.builtin import base, modules
from fermbezzle.core import convert, definitions, evaluation, numbers, util

sep = '-' * 70 + '\n'

core_modules = [util, numbers, convert, definitions, evaluation, base]

def all_modules():
    return core_modules + modules + [cli]

def short_name(module):
    return module.__name__.rsplit('.', 1)[-1]

def test_module(module, verbose=False):
    finder = doctest.DocTestFinder()
    runner = doctest.DocTestRunner(verbose=verbose, optionflags=doctest.ELLIPSIS)
    count = failed = 0
    for test in finder.find(module):
        if not test.examples:
            continue
        result = runner.run(test)
        count += 1
        if result.failed:
            failed += 1
            print(u"%sTest failed: %s\n" % (sep, test.name))
    return count, failed

def test_section(section, verbose=False):
    selected = [module for module in all_modules() if short_name(module) == section]
    if not selected:
        print('Unknown section %s; sections are %s' % (section,
            ', '.join(short_name(module) for module in all_modules())))
        return False
    print('Testing section %s' % section)
    count, failed = test_module(selected[0], verbose)
    print('')
    if failed > 0:
        print('%d test%s failed.' % (failed, 's' if failed != 1 else ''))
        return False
    print('OK')
    return True

def test_all(verbose=False):
    print("Testing %s" % get_version_string(False))

    count = failed = 0
    failed_modules = []
    try:
        for module in all_modules():
            sub_count, sub_failed = test_module(module, verbose)
            count += sub_count
            failed += sub_failed
            if sub_failed:
                failed_modules.append(module.__name__)
    except KeyboardInterrupt:
        print("\nAborted.\n")
        return False

    if failed > 0:
        print('%s' % sep)
    print("%d tests in %d modules, %d passed, %d failed." % (
        count, len(all_modules()), count - failed, failed))
    if failed_modules:
        print("Failed:")
        for name in failed_modules:
            print('  - %s' % name)
        print('\nFAILED')
        return False
    print('\nOK')
    return True

def main():
    parser = OptionParser(version='%prog ' + settings.VERSION,
        description="fermbezzle test suite.")
    parser.add_option("-s", "--section", dest="section", metavar="SECTION",
        help="only test SECTION (a module name such as toeplitz)")
    parser.add_option("-v", "--verbose", dest="verbose", action="store_true",
        help="print every example")
    options, args = parser.parse_args()

    if options.section:
        ok = test_section(options.section, options.verbose)
    else:
        ok = test_all(options.verbose)
    sys.exit(0 if ok else 1)

if __name__ == '__main__':
    main()
