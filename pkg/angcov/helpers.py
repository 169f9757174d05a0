#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains small functions that are used by all other modules in the package.
"""
import os
import logging

THREADS_ENV = "ANGCOV_THREADS"


def configure_logging(filename=None, level=None, format_=None):
    """ Configures the level and format of the logging. The messages go to stderr if filename is None. """
    if level is None:
        level = logging.WARNING
    if format_ is None:
        format_ = '%(asctime)s:%(name)s:%(funcName)s:%(levelname)s - %(message)s'
    logging.basicConfig(filename=filename, level=level,
                        format=format_
                        )


def thread_count(default=1):
    """ Reads the concurrency cap from the ANGCOV_THREADS environment variable. """
    value = os.environ.get(THREADS_ENV)
    if value is None or value.strip() == "":
        return default
    try:
        count = int(value)
    except ValueError:
        logging.getLogger(__name__).warning("Ignoring non-integer %s=%r", THREADS_ENV, value)
        return default
    return max(1, count)


def ceil_log2(value):
    """ Returns the smallest integer r >= 1 with 2**r >= value. Values slightly above a power of two round down. """
    rounds = 1
    while 2 ** rounds < value * (1 - 1e-12):
        rounds += 1
    return rounds
