#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import unittest

from lamsharing.graph import ReductionGraph
from lamsharing.utils.terms import LSC
from lamsharing.utils.io import parse_term, print_term

import logging
logger = logging.getLogger(__name__)


def parse(text):
    return parse_term(text, LSC)


class ReductionGraphTestSuite(unittest.TestCase):
    """Nodes up to renaming, labelled edges and graph queries."""

    def setUp(self):
        self.graph = ReductionGraph(root=parse("x"))
        for text in ["y", "z"]:
            self.graph.add_node(parse(text))
        self.graph.add_edge("db", 0, 1)
        self.graph.add_edge("ls", 1, 2)
        self.graph.add_edge("gc", 0, 2)

    def test_nodes_up_to_renaming(self):
        logger.debug("Testing node identification by alpha-equivalence.")
        index, created = self.graph.add_node(parse("\\v. v"))
        self.assertEqual((index, created), (3, True))
        self.assertEqual(self.graph.add_node(parse("\\w. w")), (3, False))
        self.assertIn(parse("\\y. y"), self.graph)
        self.assertEqual(self.graph.index(parse("y")), 1)
        self.assertEqual(len(self.graph), 4)
        with self.assertRaises(KeyError):
            self.graph.index(parse("x y"))

    def test_edges_are_deduplicated(self):
        self.graph.add_edge("db", 0, 1)
        self.assertEqual(self.graph.edges, [("db", 0, 1), ("ls", 1, 2), ("gc", 0, 2)])
        self.assertEqual(self.graph.successors(0), [1, 2])

    def test_queries(self):
        logger.debug("Testing maximal nodes, reachability and path lengths.")
        self.assertEqual(self.graph.maximal(), [2])
        self.assertEqual(self.graph.reachable_from(1), [1, 2])
        self.assertEqual(self.graph.longest_path(), 2)
        self.assertEqual(self.graph.longest_path(1), 1)
        self.assertFalse(self.graph.has_cycle())
        self.graph.frontier.add(2)
        self.assertEqual(self.graph.maximal(), [])

    def test_cycles(self):
        logger.debug("Testing cycle detection.")
        self.graph.add_edge("ls", 2, 0)
        self.assertTrue(self.graph.has_cycle())
        self.assertEqual(len(set(self.graph.components())), 1)
        with self.assertRaises(ValueError):
            self.graph.longest_path()
        loop = ReductionGraph(root=parse("x"))
        loop.add_edge("db", 0, 0)
        self.assertTrue(loop.has_cycle())

    def test_adjacency_and_copy(self):
        matrix = self.graph.adjacency()
        self.assertEqual(matrix.shape, (3, 3))
        self.assertEqual(matrix.nnz, 3)
        self.assertEqual(ReductionGraph().adjacency().shape, (0, 0))
        other = self.graph.copy()
        other.add_node(parse("x x"))
        self.assertEqual(len(self.graph), 3)
        self.assertEqual([print_term(t) for _, t in self.graph], ["x", "y", "z"])


if __name__ == '__main__':
    unittest.main()
