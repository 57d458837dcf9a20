"""Construct d-Fibonacci digraphs and check their structure by exact computation."""

from .digraph import Digraph, LineageLabel, adjacency_matrix, converse, diameter, induced_subdigraph
from .errors import DisconnectedError, LibraryDefect, ResourceCapError
from .linedig import build_T, iterated_line_digraph, line_digraph, order_formula
from .matrix import IntMatrix, matrix_power
from .recurrence import count_vector, d_step_fibonacci, vertex_count
from .spectral import IntPolynomial, char_poly, phi_d
from .words import Word, build_de_bruijn, build_fibonacci_digraph, enumerate_words

__version__ = "0.1.0"
