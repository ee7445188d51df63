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
from math import pi

VERSION = '0.1.0'

DEBUG = False

# echo every message and print output on stdout
DEBUG_PRINT = False

# re-raise unexpected exceptions in main instead of exit code 3
PROPAGATE_EXCEPTIONS = False

# spectral projectors of the symbol
ZERO_TOL = 1e-10
GRID_SIZE = 4096
JUMP_THRESHOLD = 1e-3
MAX_JUMPS = 64
LIMIT_OFFSET = 1e-6
REFINE_WIDTH = 2 * pi * 1e-12

# Fourier coefficients of projector symbols
QUADRATURE_GRID = 2 ** 16

# finite sections
CLIP_TOL = 1e-8
MAX_SECTION_BLOCKS = 4096
HS_OFFSETS = 4096

# essential spectrum and classification
TWO_PROJECTION_TOL = 1e-7
MERGE_SLACK = 1e-12
TRACE_CLASS_SIZES = (128, 256, 512, 1024)
TRACE_CLASS_DRIFT = 0.05
TRACE_CLASS_FLOOR = 1e-8

# quasi-free states and embezzlement
COLLAPSE_TOL = 1e-14
MODE_CLIP_TOL = 1e-10
MODE_RANGE_TOL = 1e-8
TOPK = 4096
MASS_FLOOR = 1e-6
MONOTONE_SLACK = 0.02
MAX_COVER_POINTS = 2000
ORACLE_ITERATIONS = 2000
ORACLE_MAX_DIM = 8

NORM_CONVENTION = (
    "errors are trace-norm distances ||rho_1 - rho_2||_1 of density "
    "operators, range [0, 2]; bipartite bounds are sqrt(epsilon + uncertainty)")

JOBS = int(os.environ.get('FERMBEZZLE_JOBS', '1') or 1)
