#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the SVG rendering of an instance and a solution.
"""
import io
import math
import logging

from matplotlib import rcParams
from matplotlib.figure import Figure
from matplotlib.patches import Polygon as PolygonPatch, Wedge

from .. import errors
from ..coverage import framework as fw
from ..geometry import wedges as wg

logger = logging.getLogger(__name__)

SENSOR_STYLE = dict(marker="o", s=18, facecolors="none", edgecolors="tab:gray", linewidths=0.8, zorder=2)
SELECTED_STYLE = dict(marker="o", s=30, color="tab:blue", zorder=3)
TARGET_STYLE = dict(marker="x", s=26, color="tab:red", linewidths=1.0, zorder=3)


def _draw_polygon(ax, env, face, edge):
    ax.add_patch(PolygonPatch(list(env.polygon.exterior.coords), closed=True, facecolor=face, edgecolor=edge,
                              linewidth=0.8, zorder=0))
    for ring in env.polygon.interiors:
        ax.add_patch(PolygonPatch(list(ring.coords), closed=True, facecolor="white", edgecolor=edge, linewidth=0.8,
                                  zorder=0))


def _extent(instance):
    xy = [p.xy() for p in instance.sensors + instance.targets]
    if len(xy) == 0:
        return 1.0
    xs, ys = [p[0] for p in xy], [p[1] for p in xy]
    return max(max(xs) - min(xs), max(ys) - min(ys), 1.0)


def _draw_double_wedge(ax, dw, radius):
    """ Draws both wedges of a double wedge as circular sectors of the given radius. """
    low, high = (math.degrees(a) for a in dw.interval())
    for turn in (0.0, 180.0):
        ax.add_patch(Wedge(dw.apex.xy(), radius, low + turn, high + turn, facecolor="tab:green", alpha=0.2,
                           edgecolor="tab:green", linewidth=0.6, zorder=1))


def render(instance, selected=None, target_id=None, outfile=None):
    """
    Renders the instance as SVG.

    Parameters
    ----------
    instance : Instance
        The instance.
    selected : iterable, optional
        The ids of the selected sensors, drawn filled.
    target_id : int, optional
        A target whose best witness pair is drawn together with the double wedge of the partners of its first
        sensor that alpha-cover the target.
    outfile : file, optional
        A binary file the SVG is written to. When None the SVG text is returned.

    Returns
    -------
    str
        The SVG markup, or None if it was written to outfile.
    """
    selected = sorted(set(selected)) if selected is not None else []
    rcParams["svg.hashsalt"] = "angcov"
    fig = Figure(figsize=(6, 6))
    ax = fig.add_subplot(1, 1, 1)
    ax.set_aspect("equal")
    if instance.env is not None:
        _draw_polygon(ax, instance.env, "whitesmoke", "black")
    if instance.region is not None:
        _draw_polygon(ax, instance.region, "lightyellow", "goldenrod")
    if instance.m > 0:
        ax.scatter(instance.sensor_xy[:, 0], instance.sensor_xy[:, 1], label="sensors", **SENSOR_STYLE)
    if len(selected) > 0:
        rows = [instance.sensor_row(i) for i in selected]
        ax.scatter(instance.sensor_xy[rows, 0], instance.sensor_xy[rows, 1], label="selected", **SELECTED_STYLE)
    if instance.n > 0:
        ax.scatter(instance.target_xy[:, 0], instance.target_xy[:, 1], label="targets", **TARGET_STYLE)
    if target_id is not None:
        if target_id not in {t.id for t in instance.targets}:
            raise errors.BadParams("Unknown target id {}".format(target_id))
        target_row = instance.target_row(target_id)
        rows = sorted(instance.sensor_row(i) for i in selected)
        witness = fw.best_witness(instance, rows, target_row, instance.default_bound())
        t = instance.targets[target_row]
        if len(witness.pair) == 2:
            s1, s2 = (instance.sensor(i) for i in witness.pair)
            radius = instance.radius if instance.radius is not None else 0.5 * _extent(instance)
            _draw_double_wedge(ax, wg.double_wedge(t, s1, instance.alpha), radius)
            for s in (s1, s2):
                ax.plot([t.x, s.x], [t.y, s.y], color="tab:green", linewidth=1.0, zorder=2)
        else:
            logger.warning("Target %d has no witness pair in the selection", target_id)
    if instance.variant == "angdist" and len(selected) > 0:
        ax.set_title("{} sensors of {}, R = {:g}".format(len(selected), instance.m, instance.radius))
    elif len(selected) > 0:
        ax.set_title("{} sensors of {}".format(len(selected), instance.m))
    ax.legend(loc="upper right", fontsize="small")
    ax.autoscale_view()
    buffer = io.BytesIO() if outfile is None else outfile
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    if outfile is None:
        return buffer.getvalue().decode("utf-8")
    return None
