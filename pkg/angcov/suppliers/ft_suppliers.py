#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the Euclidean fault-tolerant k-suppliers solver: every client needs delta distinct
suppliers nearby, and the solver picks at most k_OPT(R) suppliers serving every client within (1 + sqrt(3)) R.

The clients are thinned to a maximal set P with pairwise distances above sqrt(3) R. No supplier reaches three
members of P within R, so every supplier is an edge of a multigraph on P (plus a dummy vertex for suppliers
reaching a single member) and an optimal supplier set is a minimum simple b-edge cover of that graph.
"""
import math
import logging
from itertools import combinations

import numpy as np
import networkx as nx

from .. import errors
from ..geometry import primitives as prim

logger = logging.getLogger(__name__)

SQRT3 = math.sqrt(3)
DUMMY = "dummy"


class SupplierInstance:
    """
    A fault-tolerant k-suppliers instance.

    Attributes
    ----------
    suppliers : list
        The supplier points U as Point2 with unique ids.
    clients : list
        The client points V as Point2 with unique ids.
    multiplicity : int
        The number delta of distinct suppliers every client needs.
    """
    def __init__(self, suppliers, clients, multiplicity=1):
        if multiplicity < 1:
            raise errors.BadParams("The multiplicity must be at least 1, got {}".format(multiplicity))
        self.suppliers = sorted(suppliers, key=lambda p: p.id)
        self.clients = sorted(clients, key=lambda p: p.id)
        self.multiplicity = int(multiplicity)
        sxy, cxy = prim.as_array(self.suppliers), prim.as_array(self.clients)
        diff = sxy[:, None, :] - cxy[None, :, :]
        self.distances = np.hypot(diff[..., 0], diff[..., 1]).reshape(len(self.suppliers), len(self.clients))

    @classmethod
    def from_instance(cls, instance, multiplicity=2):
        """ Uses the sensors of a coverage instance as suppliers and its targets as clients. """
        return cls(instance.sensors, instance.targets, multiplicity)

    def candidate_radii(self):
        """ The sorted distinct supplier-client distances. """
        return sorted(set(float(d) for d in self.distances.ravel()))

    def __repr__(self):
        return "SupplierInstance(suppliers={}, clients={}, multiplicity={})".format(
            len(self.suppliers), len(self.clients), self.multiplicity)


class CoverageGraph:
    """
    The multigraph of the suppliers over a separated client set.

    Attributes
    ----------
    graph : networkx.MultiGraph
        The vertices are the ids of the separated clients and DUMMY. Every supplier reaching one or two
        separated clients within R is an edge keyed by its id.
    demand : dict
        The b value of every vertex: the multiplicity for clients, 0 for DUMMY.
    """
    def __init__(self, graph, demand):
        self.graph = graph
        self.demand = demand

    def clients(self):
        return sorted(v for v in self.graph.nodes if v != DUMMY)

    def edges(self):
        """ The edges as (u, v, supplier id), sorted by supplier id. """
        return sorted(((u, v, key) for u, v, key in self.graph.edges(keys=True)), key=lambda e: e[2])

    def degree(self, vertex):
        return self.graph.degree(vertex)


def separated_clients(clients, radius):
    """
    Scans the clients in id order and keeps those farther than sqrt(3) R from every kept client.

    Returns
    -------
    list
        The kept clients as Point2. Every other client lies within sqrt(3) R of one of them.
    """
    if radius <= 0:
        raise errors.BadParams("The radius must be positive, got {}".format(radius))
    kept = []
    for v in sorted(clients, key=lambda p: p.id):
        if all(v.dist(p) > SQRT3 * radius + prim.LENGTH_TOL for p in kept):
            kept.append(v)
    return kept


def build_coverage_graph(suppliers, separated, radius, multiplicity=1):
    """
    Builds the coverage multigraph of the suppliers over the separated clients.

    Raises
    ------
    ThreeClientViolation
        If a supplier reaches three separated clients within R.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(p.id for p in sorted(separated, key=lambda p: p.id))
    graph.add_node(DUMMY)
    demand = {p.id: multiplicity for p in separated}
    demand[DUMMY] = 0
    for u in sorted(suppliers, key=lambda p: p.id):
        reached = [p.id for p in separated if u.dist(p) <= radius + prim.LENGTH_TOL]
        if len(reached) > 2:
            raise errors.ThreeClientViolation("Supplier {} reaches the separated clients {}".format(u.id, reached))
        if len(reached) == 2:
            graph.add_edge(reached[0], reached[1], key=u.id)
        elif len(reached) == 1:
            graph.add_edge(reached[0], DUMMY, key=u.id)
    return CoverageGraph(graph, demand)


def max_b_matching(cover_graph):
    """
    Computes a maximum simple b-matching with the vertex-splitting gadget.

    Every vertex v becomes b_v copies and every edge between two clients becomes two internal nodes joined by an
    edge, each internal node adjacent to all copies of its endpoint. An edge belongs to the b-matching iff both of
    its internal nodes are matched to copies in a maximum matching of the gadget.

    Returns
    -------
    list
        The supplier ids of the matched edges, sorted.
    """
    gadget = nx.Graph()
    demand = cover_graph.demand
    for u, v, key in cover_graph.edges():
        if u == DUMMY or v == DUMMY:
            continue
        left, right = ("edge", key, 0), ("edge", key, 1)
        gadget.add_edge(left, right)
        for copy in range(demand[u]):
            gadget.add_edge(("copy", u, copy), left)
        for copy in range(demand[v]):
            gadget.add_edge(("copy", v, copy), right)
    matching = nx.max_weight_matching(gadget, maxcardinality=True)
    mate = dict()
    for a, b in matching:
        mate[a] = b
        mate[b] = a
    matched = []
    for u, v, key in cover_graph.edges():
        if u == DUMMY or v == DUMMY:
            continue
        left, right = ("edge", key, 0), ("edge", key, 1)
        if mate.get(left, ("edge",))[0] == "copy" and mate.get(right, ("edge",))[0] == "copy":
            matched.append(key)
    return sorted(matched)


def min_b_edge_cover(cover_graph, multiplicity=None):
    """
    Computes a minimum simple b-edge cover: every client vertex gets b_v distinct incident edges.

    A maximum b-matching is completed by adding, for every deficient vertex in id order, unused incident edges
    of lowest supplier id. The result has size sum(b_v) - |maximum b-matching|, which is minimum.

    Parameters
    ----------
    cover_graph : CoverageGraph
        The coverage graph.
    multiplicity : int, optional
        Overrides the b value of the client vertices.

    Returns
    -------
    list
        The sorted supplier ids of the cover.

    Raises
    ------
    InfeasibleAtRadius
        If some client vertex has fewer than b_v incident edges.
    """
    if multiplicity is not None:
        cover_graph = CoverageGraph(cover_graph.graph, {v: (0 if v == DUMMY else multiplicity)
                                                        for v in cover_graph.graph.nodes})
    demand = cover_graph.demand
    for v in cover_graph.clients():
        if cover_graph.degree(v) < demand[v]:
            raise errors.InfeasibleAtRadius("Client {} has {} suppliers, {} are needed".format(
                v, cover_graph.degree(v), demand[v]), v)
    chosen = set(max_b_matching(cover_graph))
    incident = {v: [] for v in cover_graph.graph.nodes}
    for u, v, key in cover_graph.edges():
        incident[u].append(key)
        incident[v].append(key)
    for v in cover_graph.clients():
        have = sum(1 for key in incident[v] if key in chosen)
        for key in incident[v]:
            if have >= demand[v]:
                break
            if key not in chosen:
                chosen.add(key)
                have += 1
    return sorted(chosen)


def solve_ft_suppliers(inst, radius):
    """
    Selects suppliers such that every client has multiplicity distinct suppliers within (1 + sqrt(3)) R.

    The selection has at most k_OPT(R) suppliers, the size of an optimal selection serving every client
    multiplicity times within R.

    Raises
    ------
    InfeasibleAtRadius
        If a separated client has fewer than multiplicity suppliers within R.
    """
    if len(inst.clients) == 0:
        return []
    separated = separated_clients(inst.clients, radius)
    cover_graph = build_coverage_graph(inst.suppliers, separated, radius, inst.multiplicity)
    selected = min_b_edge_cover(cover_graph)
    served = served_counts(inst, selected, (1 + SQRT3) * radius, tol=3 * prim.LENGTH_TOL)
    if (served < inst.multiplicity).any():
        raise errors.VerificationFailed("A client is served fewer than {} times".format(inst.multiplicity))
    logger.debug("Radius %.6f: %d separated clients, %d suppliers", radius, len(separated), len(selected))
    return selected


def served_counts(inst, selected, radius, tol=prim.LENGTH_TOL):
    """ The number of selected suppliers within the radius of every client. """
    rows = [k for k, u in enumerate(inst.suppliers) if u.id in set(selected)]
    if len(rows) == 0:
        return np.zeros(len(inst.clients), dtype=int)
    return (inst.distances[rows] <= radius + tol).sum(axis=0)


def radius_search(inst, k):
    """
    Binary-searches the candidate radii for the smallest one at which solve_ft_suppliers uses at most k suppliers.

    The solver succeeds at every radius at or above the optimal radius r*, so the search returns R* <= r*.

    Returns
    -------
    radius : float
        The radius R*.
    selected : list
        The sorted supplier ids, serving every client within (1 + sqrt(3)) R*.

    Raises
    ------
    InfeasibleBudget
        If no candidate radius works.
    """
    if k < inst.multiplicity:
        raise errors.BadParams("The budget {} is below the multiplicity {}".format(k, inst.multiplicity))
    if len(inst.clients) == 0:
        return 0.0, []
    radii = [r for r in inst.candidate_radii() if r > 0]
    results = dict()

    def succeeds(index):
        if index not in results:
            try:
                selected = solve_ft_suppliers(inst, radii[index])
                results[index] = selected if len(selected) <= k else None
            except errors.InfeasibleAtRadius:
                results[index] = None
        return results[index] is not None

    if len(radii) == 0 or not succeeds(len(radii) - 1):
        raise errors.InfeasibleBudget("No radius admits {} suppliers".format(k))
    low, high = 0, len(radii) - 1
    while low < high:
        mid = (low + high) // 2
        if succeeds(mid):
            high = mid
        else:
            low = mid + 1
    return radii[high], results[high]


def brute_force_min_suppliers(inst, radius):
    """
    Finds an optimal selection at the radius by enumerating supplier subsets by increasing size.

    Returns
    -------
    list
        The sorted supplier ids, or None if no selection serves every client multiplicity times within R.
    """
    within = inst.distances <= radius + prim.LENGTH_TOL
    need = inst.multiplicity
    if len(inst.clients) == 0:
        return []
    if (within.sum(axis=0) < need).any():
        return None
    for size in range(need, len(inst.suppliers) + 1):
        for rows in combinations(range(len(inst.suppliers)), size):
            if (within[list(rows)].sum(axis=0) >= need).all():
                return sorted(inst.suppliers[r].id for r in rows)
    return None


def brute_force_radius(inst, k):
    """ The smallest candidate radius at which some selection of at most k suppliers serves every client. """
    for radius in inst.candidate_radii():
        selection = brute_force_min_suppliers(inst, radius)
        if selection is not None and len(selection) <= k:
            return radius
    return None


def solve_zero_angle(instance, multiplicity=2):
    """
    Solves the zero-angle angdist case, where a target only needs two distinct sensors within R.

    Returns
    -------
    list
        The sorted sensor ids, giving every target two distinct sensors within (1 + sqrt(3)) R.
    """
    if instance.variant != "angdist":
        raise errors.BadParams("The zero-angle supplier solver needs an angdist instance")
    return solve_ft_suppliers(SupplierInstance.from_instance(instance, multiplicity), instance.radius)
