# Copyright 2024 Confluent Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from bitsnap.complex import simplex_complex
from bitsnap.distinguishability.bounds import clique_lower_bound, degree_upper_bound
from bitsnap.distinguishability.coloring import (ORDER_POLICIES, exact_chromatic, greedy_coloring,
                                                 max_clique_size)
from bitsnap.distinguishability.encoding import is_proper_coloring
from bitsnap.distinguishability.graphs import gadget_from_graph, indist_graph, indist_graphs
from bitsnap.subdivision.chromatic import chromatic_subdivide, iterate_subdivide
from tests.bitsnap_mock import random_complex

import networkx as nx
import pytest


def gadget_graph(h):
    return indist_graph(gadget_from_graph(h), 0)


class CheckColoring(object):

    def check_greedy_is_proper(self):
        graph = gadget_graph(nx.petersen_graph())
        for policy in ORDER_POLICIES:
            encoding = greedy_coloring(graph, policy)
            assert is_proper_coloring(graph, encoding)
            assert min(encoding.image) == 1
            assert encoding.image_size <= graph.max_degree() + 1

    def check_greedy_is_deterministic(self):
        graph = gadget_graph(nx.petersen_graph())
        assert greedy_coloring(graph).codes == greedy_coloring(graph).codes

    def check_unknown_policy(self):
        with pytest.raises(ValueError):
            greedy_coloring(gadget_graph(nx.path_graph(3)), "random")

    def check_max_clique(self):
        assert max_clique_size(gadget_graph(nx.complete_graph(4))) == 4
        assert max_clique_size(nx.Graph()) == 0

    def check_exact_odd_and_even_cycles(self):
        assert exact_chromatic(gadget_graph(nx.cycle_graph(5))).chromatic_number == 3
        assert exact_chromatic(gadget_graph(nx.cycle_graph(6))).chromatic_number == 2

    def check_exact_petersen(self):
        graph = gadget_graph(nx.petersen_graph())
        result = exact_chromatic(graph)
        assert not result.skipped
        assert result.chromatic_number == 3
        assert is_proper_coloring(graph, result.encoding)

    def check_exact_skips_large_graphs(self):
        result = exact_chromatic(gadget_graph(nx.cycle_graph(5)), node_limit=3)
        assert result.skipped
        assert result.chromatic_number is None
        assert "exceed" in result.skipped_reason

    def check_exact_deadline(self):
        graph = gadget_graph(nx.petersen_graph())
        if greedy_coloring(graph).image_size > 2:
            result = exact_chromatic(graph, deadline_sec=-1)
            assert result.skipped
            assert "deadline" in result.skipped_reason

    def check_exact_empty_graph(self):
        assert exact_chromatic(nx.Graph()).chromatic_number == 0


class CheckEncodingBounds(object):

    def check_input_simplex(self):
        c = simplex_complex(2)
        assert clique_lower_bound(c) == 1
        assert degree_upper_bound(c) == 0

    def check_subdivided_triangle(self):
        ch = chromatic_subdivide(simplex_complex(2))
        lower, upper = clique_lower_bound(ch), degree_upper_bound(ch) + 1
        assert lower <= upper
        for graph in indist_graphs(ch).values():
            assert max_clique_size(graph) <= upper
            assert greedy_coloring(graph).image_size <= upper

    def check_clique_bound_is_a_clique(self):
        for seed in range(5):
            c = iterate_subdivide(random_complex(seed), 1)
            best = max(max_clique_size(graph) for graph in indist_graphs(c).values())
            assert clique_lower_bound(c) <= best

    def check_bounds_on_random_corpus(self):
        """Clique bound <= chromatic number <= max degree + 1 on twenty subdivided random complexes."""
        for seed in range(20):
            c = chromatic_subdivide(random_complex(seed, pool=3))
            lower, upper = clique_lower_bound(c), degree_upper_bound(c) + 1
            needed = 0
            for graph in indist_graphs(c).values():
                assert greedy_coloring(graph).image_size <= upper
                result = exact_chromatic(graph)
                if not result.skipped:
                    assert result.chromatic_number <= upper
                    needed = max(needed, result.chromatic_number)
                else:
                    needed = max(needed, max_clique_size(graph))
            assert lower <= needed <= upper
