#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import copy
import numpy

from scipy.sparse import csr_matrix
from scipy.sparse import csgraph

from lamsharing.utils.operations import canonical

import logging
logger = logging.getLogger(__name__)


class ReductionGraph(object):
    """The terms reachable from a root term, and the steps between them.

    Nodes are alpha-canonical terms numbered in discovery order, so the
    root is node 0 and the numbering is deterministic for a given
    stepper. Edges are (rule, source, target) triples without duplicates.
    A graph is truncated when a cap stopped the exploration; the nodes
    whose successors were not all recorded form its frontier.

    Attributes
    ----------
    nodes: [Term, ...]
        canonical terms, indexed by node number
    edges: [(str, int, int), ...]
        labelled steps in discovery order
    truncated: bool
        True if a node or depth cap was hit
    frontier: set of int
        partially expanded nodes
    """

    def __init__(self,
                 root=None):
        """Constructor for the ReductionGraph class.

        Parameters
        ----------
        root: Term, optional
            added as node 0 when given

        Returns
        -------
        None
        """
        self.nodes = []
        self.edges = []
        self.truncated = False
        self.frontier = set()
        self._index = {}
        self._edge_set = set()
        self._successors = []
        if root is not None:
            self.add_node(root)
        return None

    def __contains__(self,
                     term):
        """Membership up to renaming of bound variables"""
        return canonical(term) in self._index

    def __getitem__(self,
                    key):
        """Indexable intrinsic"""
        return self.nodes[key]

    def __len__(self):
        """Sizeable intrinsic"""
        return len(self.nodes)

    def __iter__(self):
        """Iterable intrinsic"""
        return iter(enumerate(self.nodes))

    def copy(self):
        """Return a copy of itself as a new instance

        Returns
        -------
        lamsharing.graph.ReductionGraph
            deep copy of the current graph
        """
        return copy.deepcopy(self)

    def index(self,
              term):
        """Node number of a term; raise KeyError if it is not a node."""
        return self._index[canonical(term)]

    def add_node(self,
                 term):
        """Add a term if it is new.

        Returns
        -------
        (int, bool)
            the node number and whether the node was created
        """
        key = canonical(term)
        if key in self._index:
            return self._index[key], False
        self._index[key] = len(self.nodes)
        self.nodes.append(key)
        self._successors.append([])
        return self._index[key], True

    def add_edge(self,
                 rule,
                 source,
                 target):
        edge = (str(rule), source, target)
        if edge in self._edge_set:
            return None
        self._edge_set.add(edge)
        self.edges.append(edge)
        self._successors[source].append(target)
        return None

    def successors(self,
                   node):
        return list(self._successors[node])

    def maximal(self):
        """Fully expanded nodes without successors: the normal forms."""
        return [i for i in range(len(self.nodes))
                if not self._successors[i] and i not in self.frontier]

    def adjacency(self):
        """Sparse adjacency matrix, one entry per pair of connected nodes.

        Returns
        -------
        scipy.sparse.csr_matrix
            NxN matrix with 1.0 where a step leads from row to column
        """
        n = len(self.nodes)
        pairs = sorted({(i, j) for _, i, j in self.edges})
        if not pairs:
            return csr_matrix((n, n), dtype=float)
        rows, cols = numpy.asarray(pairs).T
        data = numpy.ones(len(pairs), dtype=float)
        return csr_matrix((data, (rows, cols)), shape=(n, n))

    def components(self):
        """Label every node with its strongly connected component.

        Returns
        -------
        numpy.array(dtype=int)
            component label per node
        """
        if not self.nodes:
            return numpy.zeros(0, dtype=int)
        _, labels = csgraph.connected_components(self.adjacency(),
                                                 directed=True,
                                                 connection="strong")
        return labels

    def has_cycle(self):
        """True if some reduction sequence in the graph loops."""
        if any(i == j for _, i, j in self.edges):
            return True
        labels = self.components()
        counts = numpy.bincount(labels) if len(labels) else labels
        return bool(numpy.any(counts > 1))

    def reachable_from(self,
                       node):
        """Node numbers reachable from node, node included, in BFS order."""
        order = csgraph.breadth_first_order(self.adjacency(),
                                            node,
                                            directed=True,
                                            return_predecessors=False)
        return [int(i) for i in order]

    def longest_path(self,
                     node=0):
        """Length of the longest reduction sequence starting at node.

        Raises
        ------
        ValueError
            if the graph has a cycle
        """
        if self.has_cycle():
            raise ValueError("the graph has a cycle")
        n = len(self.nodes)
        indegree = numpy.zeros(n, dtype=int)
        for _, _, j in self.edges:
            indegree[j] += 1
        order = []
        ready = [i for i in range(n) if indegree[i] == 0]
        while ready:
            i = ready.pop()
            order.append(i)
            for j in self._successors[i]:
                indegree[j] -= 1
                if indegree[j] == 0:
                    ready.append(j)
        longest = numpy.zeros(n, dtype=int)
        for i in reversed(order):
            if self._successors[i]:
                longest[i] = 1 + max(longest[j] for j in self._successors[i])
        return int(longest[node])
