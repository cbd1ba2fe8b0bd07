#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""
LamSharing: a workbench for the sharing linear lambda-calculus.

Reduction, weak evaluation and typing for the sharing calculus, the linear
substitution calculus (call-by-name, call-by-value, call-by-sharing and
call-by-need) and the Bang calculus, with the translations between them,
a sequent checker for the underlying logic and an exhaustive property
oracle.
"""

__all__ = ["workbench", "graph", "cli", "utils"]
__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

from lamsharing.workbench import Workbench
from lamsharing.graph import ReductionGraph

import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())
logging.basicConfig(format='%(asctime)s | %(message)s',
                    level=logging.WARNING,
                    datefmt='%I:%M:%S')
