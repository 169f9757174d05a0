#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the reading and writing of instance and solution files.

Instances are JSON objects:

    {"format": 1, "variant": "angdist", "alpha": 0.5235987755982988, "delta": 2.0, "radius": 3.0,
     "sensors": [[x, y], ...], "targets": [[x, y], ...],
     "polygon": {"outer": [[x, y], ...], "holes": [...]}, "region": {...}, "provenance": {...}}

The point ids are the positions in the arrays. Files are written with sorted keys and a fixed indent.
"""
import json
import math

from .. import errors
from ..coverage.instance import Instance
from ..geometry.polygons import PolygonEnv
from ..geometry.primitives import Point2

FORMAT_VERSION = 1


def instance_to_dict(instance):
    """ Converts an instance into the JSON-ready dictionary of the file format. """
    data = {"format": FORMAT_VERSION,
            "variant": instance.variant,
            "alpha": instance.alpha,
            "delta": instance.delta,
            "radius": instance.radius,
            "sensors": [[p.x, p.y] for p in instance.sensors],
            "targets": [[p.x, p.y] for p in instance.targets],
            "provenance": instance.provenance}
    if instance.env is not None:
        data["polygon"] = instance.env.to_dict()
    if instance.region is not None:
        data["region"] = instance.region.to_dict()
    return data


def _points(rows, name):
    points = []
    for idx, row in enumerate(rows):
        if len(row) != 2:
            raise errors.BadParams("The {} entry {} must be an [x, y] pair".format(name, idx))
        x, y = float(row[0]), float(row[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise errors.BadParams("The {} entry {} is not finite".format(name, idx))
        points.append(Point2(x, y, idx))
    return points


def _polygon(data):
    if data is None:
        return None
    return PolygonEnv([tuple(c) for c in data["outer"]], [[tuple(c) for c in ring] for ring in data.get("holes", [])])


def instance_from_dict(data):
    """
    Builds an instance from a dictionary of the file format.

    Raises
    ------
    BadParams
        If the dictionary is malformed.
    """
    try:
        if data.get("format") != FORMAT_VERSION:
            raise errors.BadParams("Unsupported instance format {!r}".format(data.get("format")))
        return Instance(data["variant"],
                        _points(data["sensors"], "sensor"),
                        _points(data["targets"], "target"),
                        data["alpha"],
                        data.get("delta", 2.0),
                        data.get("radius"),
                        _polygon(data.get("polygon")),
                        _polygon(data.get("region")),
                        data.get("provenance"))
    except (KeyError, TypeError, ValueError) as err:
        raise errors.BadParams("Malformed instance: {}".format(err)) from err


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_instance(instance, path):
    with open(path, "w", encoding="utf-8") as outfile:
        outfile.write(dumps(instance_to_dict(instance)))


def read_instance(path):
    """ Reads an instance file. Raises BadParams if it is not valid JSON or not a valid instance. """
    try:
        with open(path, "r", encoding="utf-8") as infile:
            data = json.load(infile)
    except json.JSONDecodeError as err:
        raise errors.BadParams("{} is not valid JSON: {}".format(path, err)) from err
    return instance_from_dict(data)


def write_solution(solution, path=None):
    """ Writes a solution as JSON to the path, or returns the text when the path is None. """
    text = dumps(solution.to_dict() if hasattr(solution, "to_dict") else solution)
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as outfile:
        outfile.write(text)
    return text


def read_selection(path):
    """ Reads the selected sensor ids of a solution file. """
    try:
        with open(path, "r", encoding="utf-8") as infile:
            data = json.load(infile)
        return sorted(int(i) for i in data["selected"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
        raise errors.BadParams("{} is not a valid solution file: {}".format(path, err)) from err
