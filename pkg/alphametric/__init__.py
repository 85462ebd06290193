__version__ = "0.1.0"

from .graph import Graph, parse_graph, write_graph
from .distances import DistanceMatrix, distance_matrix
from .half_integer import HalfInteger
