#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"


__all__ = ["terms", "operations", "io", "types", "lsc", "sharing",
           "translations", "bang", "mscll", "oracle"]


class LamSharingError(Exception):
    """Base class of every error the workbench reports to its users."""
    pass
